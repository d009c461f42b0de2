#include "domrec/families.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "domrec/domination.hpp"
#include "domrec/errors.hpp"

namespace domrec {

VertexSet GkrLayout::U() const {
  VertexSet s;
  for (int j = 1; j <= k; ++j) s = s.with(u(j));
  return s;
}

VertexSet GkrLayout::U0() const { return U().with(u(0)); }

VertexSet GkrLayout::V(int i) const {
  VertexSet s;
  for (int j = 1; j <= k; ++j) s = s.with(v(i, j));
  return s;
}

VertexSet QkrLayout::Wset() const {
  VertexSet s;
  for (int i = 1; i <= r; ++i) s = s.with(w(i));
  return s;
}

VertexSet QkrLayout::W(int i) const { return V(i).with(w(i)); }

void validate_construction_parameters(int k, int r) {
  if (k < 3) throw DomainError("construction needs k >= 3, got k = " + std::to_string(k));
  if (r < 1 || r > k - 1)
    throw DomainError("construction needs 1 <= r <= k-1, got k = " + std::to_string(k) +
                      ", r = " + std::to_string(r));
}

namespace {

void add_clique(std::vector<Edge>& edges, const std::vector<int>& members) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
}

std::vector<Edge> gkr_edges(const GkrLayout& L) {
  std::vector<Edge> edges;
  std::vector<int> hub_clique;
  for (int j = 0; j <= L.k; ++j) hub_clique.push_back(L.u(j));
  add_clique(edges, hub_clique);
  for (int i = 1; i <= L.r; ++i) {
    std::vector<int> leaf_clique;
    for (int j = 1; j <= L.k; ++j) leaf_clique.push_back(L.v(i, j));
    add_clique(edges, leaf_clique);
    for (int j = 1; j <= L.k; ++j) edges.emplace_back(L.u(j), L.v(i, j));
  }
  return edges;
}

std::vector<std::string> gkr_labels(const GkrLayout& L) {
  std::vector<std::string> labels;
  for (int j = 0; j <= L.k; ++j) labels.push_back("u" + std::to_string(j));
  for (int i = 1; i <= L.r; ++i)
    for (int j = 1; j <= L.k; ++j)
      labels.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
  return labels;
}

/// Calls emit(s) for every set picking one element from each choice list.
void for_each_transversal(const std::vector<std::vector<int>>& choices,
                          const std::function<void(VertexSet)>& emit) {
  std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t depth, VertexSet acc) {
    if (depth == choices.size()) {
      emit(acc);
      return;
    }
    for (int v : choices[depth]) rec(depth + 1, acc.with(v));
  };
  rec(0, VertexSet{});
}

class Checker {
public:
  explicit Checker(LemmaCheck& rec) : rec_(rec) {}

  void part(const std::string& name) { rec_.checked.push_back(name); }

  void expect(bool ok, const std::string& part, VertexSet witness, const std::string& detail = {}) {
    if (!ok) rec_.violations.push_back({part, detail, witness});
  }

  /// Compares the enumerated family with the predicted one as sets.
  void same_family(const std::string& part, const std::vector<VertexSet>& actual,
                   std::vector<VertexSet> predicted) {
    this->part(part);
    sort_canonical(predicted);
    predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());
    std::vector<VertexSet> missing, extra;
    std::set_difference(predicted.begin(), predicted.end(), actual.begin(), actual.end(),
                        std::back_inserter(missing), CanonicalLess{});
    std::set_difference(actual.begin(), actual.end(), predicted.begin(), predicted.end(),
                        std::back_inserter(extra), CanonicalLess{});
    for (VertexSet s : missing) expect(false, part, s, "predicted set is not minimal dominating");
    for (VertexSet s : extra) expect(false, part, s, "minimal dominating set not predicted");
  }

private:
  LemmaCheck& rec_;
};

std::vector<VertexSet> sets_of_size(const std::vector<VertexSet>& sets, int size) {
  std::vector<VertexSet> out;
  std::copy_if(sets.begin(), sets.end(), std::back_inserter(out),
               [size](VertexSet s) { return s.cardinality() == size; });
  return out;
}

}  // namespace

GkrGraph generate_gkr(int k, int r) {
  validate_construction_parameters(k, r);
  GkrLayout layout{k, r};
  return {Graph(layout.order(), gkr_edges(layout), gkr_labels(layout)), layout};
}

QkrGraph generate_qkr(int k, int r) {
  validate_construction_parameters(k, r);
  QkrLayout layout;
  layout.k = k;
  layout.r = r;
  std::vector<Edge> edges = gkr_edges(layout);
  std::vector<std::string> labels = gkr_labels(layout);
  for (int i = 1; i <= r; ++i) {
    for (int x : layout.U0() | layout.V(i)) edges.emplace_back(x, layout.w(i));
    labels.push_back("w" + std::to_string(i));
  }
  return {Graph(layout.order(), edges, std::move(labels)), layout};
}

std::vector<VertexSet> family_X(const GkrLayout& layout) {
  std::vector<std::vector<int>> choices{layout.U0().ids()};
  for (int i = 1; i <= layout.r; ++i) choices.push_back(layout.V(i).ids());
  std::vector<VertexSet> out;
  for_each_transversal(choices, [&](VertexSet s) { out.push_back(s); });
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> family_W(const QkrLayout& layout) {
  std::vector<std::vector<int>> choices;
  for (int i = 1; i <= layout.r; ++i) choices.push_back(layout.W(i).ids());
  const VertexSet ws = layout.Wset();
  std::vector<VertexSet> out;
  for_each_transversal(choices, [&](VertexSet s) {
    if (s.intersects(ws)) out.push_back(s);
  });
  sort_canonical(out);
  return out;
}

VertexSet note_irredundant_witness(const GkrLayout& layout) {
  VertexSet s;
  for (int j = 1; j <= layout.k - 1; ++j) s = s.with(layout.u(j));
  for (int i = 1; i <= layout.r - 1; ++i) s = s.with(layout.v(i, layout.k));
  return s;
}

LemmaCheck verify_gkr_lemmas(int k, int r, const Budget& budget) {
  const auto [g, L] = generate_gkr(k, r);
  const DomFamily fam = enumerate_minimal_dominating(g, budget);
  LemmaCheck rec;
  rec.k = k;
  rec.r = r;
  rec.gamma = fam.gamma;
  rec.Gamma = fam.Gamma;
  rec.family_size = fam.size();
  std::size_t power = 1;
  for (int i = 0; i < r; ++i) power *= static_cast<std::size_t>(k);
  rec.expected_family_size = (k + 1) * power + 1;

  Checker c(rec);
  const VertexSet U = L.U(), U0 = L.U0();
  const int hub = L.u(0);
  for (const char* p : {"meets-U0", "meets-every-V-unless-contains-U", "at-most-one-per-V",
                        "hub-excludes-rest-of-U0", "misses-some-V-implies-equals-U"})
    c.part(p);
  for (VertexSet X : fam.sets) {
    c.expect(X.intersects(U0), "meets-U0", X);
    bool misses_some_v = false;
    for (int i = 1; i <= r; ++i) {
      const VertexSet Vi = L.V(i);
      if (!U.subset_of(X)) c.expect(X.intersects(Vi), "meets-every-V-unless-contains-U", X);
      c.expect((X & Vi).cardinality() <= 1, "at-most-one-per-V", X);
      misses_some_v = misses_some_v || !X.intersects(Vi);
    }
    if (X.contains(hub))
      c.expect((X & U0) == VertexSet::singleton(hub), "hub-excludes-rest-of-U0", X);
    if (misses_some_v) c.expect(X == U, "misses-some-V-implies-equals-U", X);
  }

  std::vector<VertexSet> xs = family_X(L);
  std::vector<VertexSet> predicted = xs;
  predicted.push_back(U);
  c.same_family("family-is-X-plus-U", fam.sets, predicted);

  c.part("Gamma-equals-k");
  c.expect(fam.Gamma == k, "Gamma-equals-k", U, "Gamma = " + std::to_string(fam.Gamma));
  c.part("X-are-the-gamma-sets");
  c.expect(fam.gamma == r + 1, "X-are-the-gamma-sets", fam.sets.front(),
           "gamma = " + std::to_string(fam.gamma));
  const auto gamma_sets = sets_of_size(fam.sets, fam.gamma);
  if (r < k - 1) {
    c.expect(gamma_sets == xs, "X-are-the-gamma-sets", VertexSet{}, "gamma-sets differ from X");
    c.part("U-is-the-only-Gamma-set");
    const auto Gamma_sets = sets_of_size(fam.sets, fam.Gamma);
    c.expect(Gamma_sets.size() == 1 && Gamma_sets.front() == U, "U-is-the-only-Gamma-set",
             Gamma_sets.empty() ? VertexSet{} : Gamma_sets.back());
  } else {
    c.part("well-dominated");
    c.expect(fam.gamma == fam.Gamma, "well-dominated", fam.sets.front());
    c.expect(gamma_sets.size() == fam.size(), "X-are-the-gamma-sets", VertexSet{},
             "not every minimal dominating set is a gamma-set");
  }
  return rec;
}

LemmaCheck verify_qkr_lemmas(int k, int r, const Budget& budget) {
  const auto [g, L] = generate_qkr(k, r);
  const DomFamily fam = enumerate_minimal_dominating(g, budget);
  LemmaCheck rec;
  rec.k = k;
  rec.r = r;
  rec.gamma = fam.gamma;
  rec.Gamma = fam.Gamma;
  rec.family_size = fam.size();
  std::size_t kr = 1, k1r = 1;
  for (int i = 0; i < r; ++i) kr *= static_cast<std::size_t>(k), k1r *= static_cast<std::size_t>(k + 1);
  rec.expected_family_size = (k + 1) * kr + (k1r - kr) + 1;

  Checker c(rec);
  const VertexSet U = L.U(), U0 = L.U0(), ws = L.Wset();
  const int hub = L.u(0);
  for (const char* p : {"meets-U0-or-some-w", "meets-every-W-unless-contains-U",
                        "meets-V-when-w-absent-unless-contains-U", "at-most-one-per-W",
                        "hub-excludes-rest-of-U0", "misses-some-W-implies-equals-U",
                        "w-excludes-U0"})
    c.part(p);
  for (VertexSet X : fam.sets) {
    c.expect(X.intersects(U0 | ws), "meets-U0-or-some-w", X);
    bool misses_some_w = false;
    for (int i = 1; i <= r; ++i) {
      const VertexSet Wi = L.W(i);
      if (!U.subset_of(X)) {
        c.expect(X.intersects(Wi), "meets-every-W-unless-contains-U", X);
        if (!X.contains(L.w(i)))
          c.expect(X.intersects(L.V(i)), "meets-V-when-w-absent-unless-contains-U", X);
      }
      c.expect((X & Wi).cardinality() <= 1, "at-most-one-per-W", X);
      misses_some_w = misses_some_w || !X.intersects(Wi);
    }
    if (X.contains(hub))
      c.expect((X & U0) == VertexSet::singleton(hub), "hub-excludes-rest-of-U0", X);
    if (misses_some_w) c.expect(X == U, "misses-some-W-implies-equals-U", X);
    if (X.intersects(ws)) c.expect(!X.intersects(U0), "w-excludes-U0", X);
  }

  const std::vector<VertexSet> xs = family_X(L);
  const std::vector<VertexSet> wsets = family_W(L);
  std::vector<VertexSet> predicted = xs;
  predicted.insert(predicted.end(), wsets.begin(), wsets.end());
  predicted.push_back(U);
  c.same_family("family-is-X-plus-W-plus-U", fam.sets, predicted);

  c.part("W-are-the-gamma-sets");
  c.expect(fam.gamma == r, "W-are-the-gamma-sets", fam.sets.front(),
           "gamma = " + std::to_string(fam.gamma));
  c.expect(sets_of_size(fam.sets, fam.gamma) == wsets, "W-are-the-gamma-sets", VertexSet{},
           "gamma-sets differ from W");
  c.part("Gamma-equals-k");
  c.expect(fam.Gamma == k, "Gamma-equals-k", U, "Gamma = " + std::to_string(fam.Gamma));

  std::vector<VertexSet> Gamma_sets = sets_of_size(fam.sets, fam.Gamma);
  if (r < k - 1) {
    c.part("U-is-the-only-Gamma-set");
    c.expect(Gamma_sets.size() == 1 && Gamma_sets.front() == U, "U-is-the-only-Gamma-set",
             Gamma_sets.empty() ? VertexSet{} : Gamma_sets.back());
  } else {
    c.part("X-are-Gamma-sets");
    std::vector<VertexSet> expected = xs;
    expected.push_back(U);
    sort_canonical(expected);
    c.expect(Gamma_sets == expected, "X-are-Gamma-sets", VertexSet{},
             "Gamma-sets differ from X plus U");
  }
  return rec;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
  return Graph(n + 1, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

}  // namespace domrec
