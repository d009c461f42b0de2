#include "domrec/graph.hpp"

#include <algorithm>
#include <functional>

#include "domrec/errors.hpp"

namespace domrec {

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (n < 1) throw DomainError("graph must have at least one vertex");
  if (n > kMaxVertices)
    throw DomainError("graph order " + std::to_string(n) + " exceeds supported maximum " +
                      std::to_string(kMaxVertices));
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw DomainError("label count does not match graph order");

  open_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") references a vertex outside [0, " + std::to_string(n) + ")");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (open_[u].contains(v))
      throw DomainError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    open_[u] = open_[u].with(v);
    open_[v] = open_[v].with(u);
    ++edge_count_;
  }
  closed_.resize(n);
  for (int v = 0; v < n; ++v) closed_[v] = open_[v].with(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : open_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(order());
  for (int v = 0; v < order(); ++v) seq.push_back(degree(v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(open_.begin(), open_.end(), [](VertexSet s) { return s.empty(); });
}

std::string Graph::label(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

VertexSet Graph::make_set(const std::vector<int>& ids) const {
  for (int v : ids)
    if (v < 0 || v >= order())
      throw DomainError("vertex id " + std::to_string(v) + " not in graph of order " +
                        std::to_string(order()));
  return VertexSet::from_ids(ids);
}

bool is_dominating(const Graph& g, VertexSet s) {
  VertexSet covered;
  for (int v : s) covered |= g.closed_neighbourhood(v);
  return covered == g.vertices();
}

VertexSet private_neighbours(const Graph& g, int v, VertexSet d) {
  if (v < 0 || v >= g.order() || !d.contains(v))
    throw DomainError("private_neighbours: vertex " + std::to_string(v) + " is not in " +
                      d.to_string());
  VertexSet others;
  const VertexSet rest = d.without(v);
  for (int x : rest) others |= g.closed_neighbourhood(x);
  return g.closed_neighbourhood(v).minus(others);
}

bool is_irredundant(const Graph& g, VertexSet x) {
  // A member is redundant iff its closed neighbourhood is covered by the
  // members dominated at least twice.
  VertexSet once, twice;
  for (int v : x) {
    twice |= once & g.closed_neighbourhood(v);
    once |= g.closed_neighbourhood(v);
  }
  const VertexSet exactly_once = once.minus(twice);
  for (int v : x)
    if (!g.closed_neighbourhood(v).intersects(exactly_once)) return false;
  return true;
}

bool is_minimal_dominating(const Graph& g, VertexSet d) {
  return is_dominating(g, d) && is_irredundant(g, d);
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s)
    if (g.neighbours(v).intersects(s)) return false;
  return true;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int n = g.order() * h.order();
  if (n > kMaxVertices)
    throw DomainError("cartesian product order " + std::to_string(n) +
                      " exceeds supported maximum " + std::to_string(kMaxVertices));
  const int m = h.order();
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (auto [a, b] : h.edges()) edges.emplace_back(u * m + a, u * m + b);
  for (auto [a, b] : g.edges())
    for (int v = 0; v < m; ++v) edges.emplace_back(a * m + v, b * m + v);
  return Graph(n, edges);
}

}  // namespace domrec
