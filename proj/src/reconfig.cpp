#include "domrec/reconfig.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "domrec/errors.hpp"

namespace domrec {

namespace {

class UnionFind {
public:
  std::uint32_t add() {
    const auto id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(id);
    rank_.push_back(0);
    ++components_;
    return id;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
  }

  std::size_t components() const { return components_; }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_ = 0;
};

/// Grows D_k one cardinality layer at a time. Every dominating set of size
/// s+1 is either minimal or a single-vertex extension of a dominating set
/// of size s, so each layer is generated from the one below plus the
/// minimal dominating sets of that size. Edges join a set to each of its
/// single-vertex deletions, found in a hash index of the layer below.
class LayeredDk {
public:
  LayeredDk(const Graph& g, const DomFamily& fam, const Budget& budget, bool record_edges)
      : g_(g), fam_(fam), meter_(budget, "k-dominating graph vertices"),
        record_edges_(record_edges) {}

  int top() const { return top_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return size_; }
  std::size_t components() const { return uf_.components(); }

  void add_layer() {
    const int s = ++top_;
    std::vector<VertexSet> layer;
    for (VertexSet d : previous_) {
      for (int v : g_.vertices().minus(d)) {
        meter_.charge();
        layer.push_back(d.with(v));
      }
    }
    for (VertexSet m : fam_.sets)
      if (m.cardinality() == s) layer.push_back(m);
    sort_canonical(layer);
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());

    std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> index;
    index.reserve(layer.size());
    for (VertexSet d : layer) {
      const std::uint32_t id = uf_.add();
      index.emplace(d, id);
      if (record_edges_) verts_.push_back(d);
      for (int v : d) {
        auto it = previous_index_.find(d.without(v));
        if (it == previous_index_.end()) continue;
        uf_.unite(it->second, id);
        ++size_;
        if (record_edges_) edges_.emplace_back(it->second, id);
      }
    }
    order_ += layer.size();
    previous_ = std::move(layer);
    previous_index_ = std::move(index);
  }

  void grow_to(int k) {
    while (top_ < k) add_layer();
  }

  ReconfigGraph take(int k) {
    ReconfigGraph rg;
    rg.k = k;
    rg.verts = std::move(verts_);
    rg.edges = std::move(edges_);
    std::sort(rg.edges.begin(), rg.edges.end());
    rg.component_count = components();
    return rg;
  }

private:
  const Graph& g_;
  const DomFamily& fam_;
  WorkMeter meter_;
  bool record_edges_;
  int top_ = -1;
  std::size_t order_ = 0;
  std::size_t size_ = 0;
  UnionFind uf_;
  std::vector<VertexSet> previous_;
  std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> previous_index_;
  std::vector<VertexSet> verts_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

}  // namespace

std::vector<std::vector<std::uint32_t>> ReconfigGraph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(verts.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

ReconfigGraph build_dk(const Graph& g, int k, const Budget& budget) {
  if (k < 0) throw DomainError("k must be non-negative");
  const DomFamily fam = enumerate_minimal_dominating(g, budget);
  LayeredDk builder(g, fam, budget, true);
  builder.grow_to(std::min(k, g.order()));
  return builder.take(k);
}

int d0_direct(const Graph& g, const Budget& budget) {
  return d0_direct(g, enumerate_minimal_dominating(g, budget), budget);
}

int d0_direct(const Graph& g, const DomFamily& fam, const Budget& budget) {
  if (g.size() == 0) throw DomainError("d0 is undefined here for an edgeless graph");
  LayeredDk builder(g, fam, budget, false);
  builder.grow_to(fam.Gamma + 1);
  while (builder.components() != 1) {
    if (builder.top() >= g.order()) throw Error("D_n found disconnected; internal invariant broken");
    builder.add_layer();
  }
  return builder.top();
}

ConnectivityProfile connectivity_profile(const Graph& g, const Budget& budget) {
  const DomFamily fam = enumerate_minimal_dominating(g, budget);
  ConnectivityProfile profile;
  profile.gamma = fam.gamma;
  profile.Gamma = fam.Gamma;
  LayeredDk builder(g, fam, budget, false);
  builder.grow_to(fam.gamma - 1);
  for (int k = fam.gamma; k <= g.order(); ++k) {
    builder.add_layer();
    profile.records.push_back({k, builder.order(), builder.size(), builder.components(),
                               builder.components() == 1});
  }
  return profile;
}

std::optional<std::vector<VertexSet>> reconfig_path(const Graph& g, VertexSet a, VertexSet b,
                                                    int k, const Budget& budget) {
  for (VertexSet end : {a, b}) {
    if (!end.subset_of(g.vertices()))
      throw DomainError(end.to_string() + " contains a vertex outside the graph");
    if (!is_dominating(g, end)) throw DomainError(end.to_string() + " is not dominating");
    if (end.cardinality() > k)
      throw DomainError(end.to_string() + " has more than k = " + std::to_string(k) + " vertices");
  }

  WorkMeter meter(budget, "reconfiguration path search");
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> parent;
  std::deque<VertexSet> queue{a};
  parent.emplace(a, a);
  std::vector<VertexSet> next;
  while (!queue.empty() && !parent.contains(b)) {
    const VertexSet s = queue.front();
    queue.pop_front();
    meter.charge();
    next.clear();
    for (int v : s)
      if (is_dominating(g, s.without(v))) next.push_back(s.without(v));
    if (s.cardinality() < k)
      for (int v : g.vertices().minus(s)) next.push_back(s.with(v));
    sort_canonical(next);
    for (VertexSet t : next)
      if (parent.emplace(t, s).second) queue.push_back(t);
  }
  if (!parent.contains(b)) return std::nullopt;

  std::vector<VertexSet> path{b};
  while (path.back() != a) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<int> dk_diameter(const ReconfigGraph& rg) {
  if (rg.verts.empty() || !rg.connected()) return std::nullopt;
  const auto adj = rg.adjacency();
  const std::size_t n = rg.verts.size();
  std::vector<int> dist(n);
  std::vector<std::uint32_t> queue(n);
  int diameter = 0;
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint32_t>(src);
    while (head < tail) {
      const std::uint32_t u = queue[head++];
      for (std::uint32_t w : adj[u]) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        diameter = std::max(diameter, dist[w]);
        queue[tail++] = w;
      }
    }
  }
  return diameter;
}

}  // namespace domrec
