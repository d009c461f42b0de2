#include "domrec/domination.hpp"

#include <algorithm>

namespace domrec {

namespace {

class MinimalDominatingSearch {
public:
  MinimalDominatingSearch(const Graph& g, const Budget& budget)
      : g_(g), meter_(budget, "minimal dominating set search nodes"), deadline_(g.order()) {
    // deadline_[i]: vertices whose closed neighbourhood is fully decided
    // once vertex i has been decided.
    for (int u = 0; u < g.order(); ++u) {
      const VertexSet nb = g.closed_neighbourhood(u);
      const int last = 63 - std::countl_zero(nb.bits());
      deadline_[last] = deadline_[last].with(u);
    }
  }

  std::vector<VertexSet> run() {
    descend(0, VertexSet{}, VertexSet{});
    return std::move(found_);
  }

private:
  void descend(int i, VertexSet chosen, VertexSet dominated) {
    meter_.charge();
    if (i == g_.order()) {
      found_.push_back(chosen);
      return;
    }
    const VertexSet with_i = chosen.with(i);
    const VertexSet dom_with_i = dominated | g_.closed_neighbourhood(i);
    if (deadline_[i].subset_of(dom_with_i) && is_irredundant(g_, with_i))
      descend(i + 1, with_i, dom_with_i);
    if (deadline_[i].subset_of(dominated)) descend(i + 1, chosen, dominated);
  }

  const Graph& g_;
  WorkMeter meter_;
  std::vector<VertexSet> deadline_;
  std::vector<VertexSet> found_;
};

class MaximalIndependentSearch {
public:
  MaximalIndependentSearch(const Graph& g, const Budget& budget)
      : meter_(budget, "maximal independent set search nodes") {
    const VertexSet all = g.vertices();
    for (int v = 0; v < g.order(); ++v) non_adjacent_.push_back(all.minus(g.closed_neighbourhood(v)));
    expand(VertexSet{}, all, VertexSet{});
  }

  std::vector<VertexSet> take() { return std::move(found_); }

private:
  // Cliques of the complement graph.
  void expand(VertexSet r, VertexSet p, VertexSet x) {
    meter_.charge();
    if (p.empty()) {
      if (x.empty()) found_.push_back(r);
      return;
    }
    int pivot = -1, best = -1;
    for (int u : p | x) {
      const int c = (p & non_adjacent_[u]).cardinality();
      if (c > best) best = c, pivot = u;
    }
    for (int v : p.minus(non_adjacent_[pivot])) {
      expand(r.with(v), p & non_adjacent_[v], x & non_adjacent_[v]);
      p = p.without(v);
      x = x.with(v);
    }
  }

  WorkMeter meter_;
  std::vector<VertexSet> non_adjacent_;
  std::vector<VertexSet> found_;
};

class IrredundantSearch {
public:
  IrredundantSearch(const Graph& g, const Budget& budget)
      : g_(g), meter_(budget, "irredundant set search nodes") {}

  int run() {
    extend(0, VertexSet{});
    return best_;
  }

private:
  void extend(int start, VertexSet current) {
    meter_.charge();
    best_ = std::max(best_, current.cardinality());
    for (int v = start; v < g_.order(); ++v) {
      if (current.cardinality() + (g_.order() - v) <= best_) return;
      const VertexSet next = current.with(v);
      if (is_irredundant(g_, next)) extend(v + 1, next);
    }
  }

  const Graph& g_;
  WorkMeter meter_;
  int best_ = 0;
};

template <typename F>
auto naming_budget_failure(const char* invariant, F&& compute) {
  try {
    return compute();
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string(invariant) + ": " + e.limit_name(), e.limit());
  }
}

}  // namespace

DomFamily enumerate_minimal_dominating(const Graph& g, const Budget& budget) {
  DomFamily fam;
  fam.sets = MinimalDominatingSearch(g, budget).run();
  sort_canonical(fam.sets);
  fam.gamma = fam.sets.front().cardinality();
  fam.Gamma = fam.sets.back().cardinality();
  return fam;
}

std::vector<VertexSet> list_maximal_independent(const Graph& g, const Budget& budget) {
  auto sets = MaximalIndependentSearch(g, budget).take();
  sort_canonical(sets);
  return sets;
}

int compute_alpha(const Graph& g, const Budget& budget) {
  return list_maximal_independent(g, budget).back().cardinality();
}

int compute_ir(const Graph& g, const Budget& budget) {
  return IrredundantSearch(g, budget).run();
}

InvariantReport invariant_report(const Graph& g, const InvariantOptions& options) {
  InvariantReport report;
  const DomFamily fam = naming_budget_failure(
      "gamma/Gamma", [&] { return enumerate_minimal_dominating(g, options.budget); });
  report.gamma = fam.gamma;
  report.Gamma = fam.Gamma;
  report.num_minimal_dom_sets = fam.size();
  report.well_dominated = fam.gamma == fam.Gamma;

  const auto independent = naming_budget_failure(
      "alpha", [&] { return list_maximal_independent(g, options.budget); });
  report.alpha = independent.back().cardinality();
  report.num_maximal_independent_sets = independent.size();
  report.well_covered = independent.front().cardinality() == report.alpha;

  const bool want_ir = options.ir == IrMode::Force ||
                       (options.ir == IrMode::Auto && g.order() <= options.ir_auto_max_order);
  if (want_ir) report.ir = naming_budget_failure("IR", [&] { return compute_ir(g, options.budget); });
  return report;
}

}  // namespace domrec
