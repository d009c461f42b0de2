#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domrec/vertex_set.hpp"

namespace domrec {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1 with precomputed
/// open and closed neighbourhood masks.
class Graph {
public:
  /// Throws DomainError on n outside [1, kMaxVertices], out-of-range ids,
  /// self-loops or repeated edges.
  Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(open_.size()); }
  int size() const { return edge_count_; }
  VertexSet vertices() const { return VertexSet::full(order()); }

  VertexSet neighbours(int v) const { return open_[v]; }
  VertexSet closed_neighbourhood(int v) const { return closed_[v]; }
  bool adjacent(int u, int v) const { return open_[u].contains(v); }
  int degree(int v) const { return open_[v].cardinality(); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted descending
  bool has_isolated_vertex() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  /// Checks that every id lies in range; throws DomainError otherwise.
  VertexSet make_set(const std::vector<int>& ids) const;

  bool operator==(const Graph& o) const { return open_ == o.open_; }

private:
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
  std::vector<std::string> labels_;
  int edge_count_ = 0;
};

/// s dominates g iff the closed neighbourhoods of its members cover V(g).
bool is_dominating(const Graph& g, VertexSet s);

/// Vertices of N[v] whose closed neighbourhood meets d exactly in {v}.
/// Throws DomainError when v is not a member of d.
VertexSet private_neighbours(const Graph& g, int v, VertexSet d);

bool is_irredundant(const Graph& g, VertexSet x);
bool is_minimal_dominating(const Graph& g, VertexSet d);
bool is_independent(const Graph& g, VertexSet s);

/// Vertex (u, v) maps to u * h.order() + v.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace domrec
