#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "domrec/budget.hpp"
#include "domrec/domination.hpp"
#include "domrec/graph.hpp"

namespace domrec {

/// Explicit k-dominating graph: dominating sets of cardinality <= k, two
/// sets adjacent when one is the other plus a single vertex.
struct ReconfigGraph {
  int k = 0;
  std::vector<VertexSet> verts;  // canonical order
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (smaller, larger), sorted
  std::size_t component_count = 0;

  std::size_t order() const { return verts.size(); }
  std::size_t size() const { return edges.size(); }
  bool connected() const { return component_count == 1; }

  /// Neighbour lists in canonical order, derived from edges.
  std::vector<std::vector<std::uint32_t>> adjacency() const;
};

struct ConnectivityRecord {
  int k = 0;
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t component_count = 0;
  bool connected = false;
};

struct ConnectivityProfile {
  int gamma = 0;
  int Gamma = 0;
  std::vector<ConnectivityRecord> records;  // k = gamma .. n
};

/// k < gamma(g) yields an empty graph.
ReconfigGraph build_dk(const Graph& g, int k, const Budget& budget = {});

/// Smallest k >= Gamma+1 with D_k connected. Throws DomainError on an
/// edgeless graph.
int d0_direct(const Graph& g, const Budget& budget = {});
int d0_direct(const Graph& g, const DomFamily& fam, const Budget& budget = {});

ConnectivityProfile connectivity_profile(const Graph& g, const Budget& budget = {});

/// Shortest add/remove sequence from a to b inside D_k, or nullopt when
/// they lie in different components. Among equal-length paths, the one
/// reached through lowest canonical-order neighbours wins.
std::optional<std::vector<VertexSet>> reconfig_path(const Graph& g, VertexSet a, VertexSet b,
                                                    int k, const Budget& budget = {});

/// Diameter of a connected D_k; nullopt when disconnected or empty.
std::optional<int> dk_diameter(const ReconfigGraph& rg);

}  // namespace domrec
