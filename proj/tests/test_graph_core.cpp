#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "domrec/errors.hpp"
#include "domrec/families.hpp"
#include "domrec/graph.hpp"
#include "oracles.hpp"

using namespace domrec;

namespace {

// K_{1,3}: centre c = 0, leaves l1..l3 = 1..3.
constexpr int c = 0, l1 = 1, l2 = 2, l3 = 3;

}  // namespace

TEST_CASE("VertexSet basics and canonical order") {
  const VertexSet s{0, 3, 5};
  CHECK(s.cardinality() == 3);
  CHECK(s.to_string() == "{0,3,5}");
  CHECK(s.ids() == std::vector<int>{0, 3, 5});
  CHECK(VertexSet::full(64).cardinality() == 64);
  CHECK(VertexSet::full(5).bits() == 0b11111);

  std::vector<VertexSet> sets{{1, 2}, {0, 2}, {3}, {0, 1}, {0, 1, 2}};
  sort_canonical(sets);
  CHECK(sets == std::vector<VertexSet>{{3}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK_THROWS_AS(VertexSet({64}), DomainError);
}

TEST_CASE("canonical order agrees with sorted member lists") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const VertexSet a(rng() & 0xFFF), b(rng() & 0xFFF);
    CHECK(canonical_less(a, b) == oracle::canonical_before(a.bits(), b.bits()));
  }
}

TEST_CASE("Graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(0, {}), DomainError);
  CHECK_THROWS_AS(Graph(65, {}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  CHECK_NOTHROW(Graph(64, {{0, 63}}));
}

TEST_CASE("closed neighbourhoods and symmetry") {
  const Graph g = path_graph(4);
  for (int v = 0; v < g.order(); ++v) {
    CHECK_FALSE(g.neighbours(v).contains(v));
    CHECK(g.closed_neighbourhood(v) == g.neighbours(v).with(v));
    for (int u : g.neighbours(v)) CHECK(g.adjacent(u, v));
  }
}

TEST_CASE("is_dominating on the star") {
  const Graph k13 = star_graph(3);
  CHECK(is_dominating(k13, {c}));
  CHECK_FALSE(is_dominating(k13, {l1}));
  CHECK(is_dominating(k13, {l1, l2, l3}));
  CHECK_FALSE(is_dominating(k13, VertexSet{}));
}

TEST_CASE("private_neighbours") {
  const Graph k13 = star_graph(3);
  // Brute-force scan gives {l1}.
  CHECK(oracle::private_neighbours(k13, l1, VertexSet{l1, l2, l3}.bits()) == VertexSet{l1}.bits());
  CHECK(private_neighbours(k13, l1, {l1, l2, l3}) == VertexSet{l1});
  CHECK(private_neighbours(k13, c, {c}) == VertexSet{c, l1, l2, l3});

  // P_4 with vertices 1-2-3-4 relabelled 0-1-2-3: PN(2, {2,3}) = {1}.
  const Graph p4 = path_graph(4);
  CHECK(oracle::private_neighbours(p4, 1, VertexSet{1, 2}.bits()) == VertexSet{0}.bits());
  CHECK(private_neighbours(p4, 1, {1, 2}) == VertexSet{0});

  CHECK_THROWS_AS(private_neighbours(k13, l1, {c}), DomainError);
}

TEST_CASE("is_minimal_dominating and is_irredundant") {
  const Graph k13 = star_graph(3);
  CHECK(is_minimal_dominating(k13, {c}));
  CHECK_FALSE(oracle::minimal_dominating(k13, VertexSet{c, l1}.bits()));
  CHECK_FALSE(is_minimal_dominating(k13, {c, l1}));
  CHECK(private_neighbours(k13, c, {c, l1}) == VertexSet{l2, l3});
  CHECK(private_neighbours(k13, l1, {c, l1}).empty());

  const Graph p4 = path_graph(4);
  CHECK(oracle::minimal_dominating(p4, VertexSet{0, 3}.bits()));
  CHECK(is_minimal_dominating(p4, {0, 3}));

  const Graph k3 = complete_graph(3);
  CHECK(is_irredundant(k3, VertexSet{}));
  CHECK_FALSE(oracle::irredundant(k3, VertexSet{0, 1}.bits()));
  CHECK_FALSE(is_irredundant(k3, {0, 1}));

  const auto [g43, L] = generate_gkr(4, 3);
  const VertexSet note{L.u(1), L.u(2), L.u(3), L.v(1, 4), L.v(2, 4)};
  CHECK(is_irredundant(g43, note));
  CHECK_FALSE(is_dominating(g43, note));
}

TEST_CASE("cartesian_product") {
  const Graph pk = cartesian_product(path_graph(3), complete_graph(3));
  CHECK(pk.order() == 9);
  CHECK(pk.size() == 15);  // 3 triangles + 3 paths of 2 edges

  const Graph k2k2 = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(k2k2.size() == 4);
  CHECK(k2k2.degree_sequence() == std::vector<int>{2, 2, 2, 2});
  CHECK(k2k2.adjacent(0, 1));
  CHECK(k2k2.adjacent(1, 3));
  CHECK(k2k2.adjacent(3, 2));
  CHECK(k2k2.adjacent(2, 0));

  const Graph c5 = cycle_graph(5);
  const Graph k1c5 = cartesian_product(Graph(1, {}), c5);
  CHECK(k1c5 == c5);

  CHECK_THROWS_AS(cartesian_product(complete_graph(9), complete_graph(8)), DomainError);
}

TEST_CASE("property: kernel invariants on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    for (int rep = 0; rep < 10; ++rep) {
      const VertexSet s(rng() & g.vertices().bits());
      CHECK(is_dominating(g, s) == oracle::dominates(g, s.bits()));
      CHECK(is_minimal_dominating(g, s) == oracle::minimal_dominating(g, s.bits()));
      CHECK(is_irredundant(g, s) == oracle::irredundant(g, s.bits()));
      if (is_minimal_dominating(g, s)) CHECK((is_dominating(g, s) && is_irredundant(g, s)));
      // Supersets of dominating sets dominate.
      if (is_dominating(g, s)) CHECK(is_dominating(g, s | VertexSet(rng() & g.vertices().bits())));
      for (int v : s) CHECK(private_neighbours(g, v, s).subset_of(g.closed_neighbourhood(v)));
    }
  }
}

TEST_CASE("property: cartesian product commutes up to degree sequence") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = oracle::random_graph(rng, std::uniform_int_distribution<int>(1, 5)(rng), 0.5);
    const Graph b = oracle::random_graph(rng, std::uniform_int_distribution<int>(1, 5)(rng), 0.5);
    const Graph ab = cartesian_product(a, b), ba = cartesian_product(b, a);
    CHECK(ab.size() == ba.size());
    CHECK(ab.size() == a.order() * b.size() + b.order() * a.size());
    CHECK(ab.degree_sequence() == ba.degree_sequence());
  }
}
