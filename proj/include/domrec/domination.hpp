#pragma once

#include <optional>
#include <vector>

#include "domrec/budget.hpp"
#include "domrec/graph.hpp"

namespace domrec {

/// All minimal dominating sets of a graph in canonical order.
struct DomFamily {
  std::vector<VertexSet> sets;
  int gamma = 0;  // domination number
  int Gamma = 0;  // upper domination number

  std::size_t size() const { return sets.size(); }
};

/// Exact enumeration by include/exclude backtracking over vertices in id
/// order. A branch dies as soon as some vertex whose closed neighbourhood
/// has been fully decided is undominated, or some chosen vertex has lost
/// its last private neighbour. Every leaf is therefore minimal dominating.
DomFamily enumerate_minimal_dominating(const Graph& g, const Budget& budget = {});

/// Maximal independent sets in canonical order (Bron-Kerbosch with pivoting
/// on the complement).
std::vector<VertexSet> list_maximal_independent(const Graph& g, const Budget& budget = {});

int compute_alpha(const Graph& g, const Budget& budget = {});

/// Maximum cardinality of an irredundant set. Irredundance is hereditary,
/// so the search only ever extends irredundant sets.
int compute_ir(const Graph& g, const Budget& budget = {});

enum class IrMode { Auto, Force, Skip };

struct InvariantOptions {
  IrMode ir = IrMode::Auto;
  /// Auto mode computes IR only up to this order.
  int ir_auto_max_order = 20;
  Budget budget;
};

struct InvariantReport {
  int gamma = 0;
  int Gamma = 0;
  int alpha = 0;
  std::optional<int> ir;
  std::size_t num_minimal_dom_sets = 0;
  std::size_t num_maximal_independent_sets = 0;
  bool well_covered = false;
  bool well_dominated = false;
};

/// Budget errors are rethrown with the failing invariant named in the limit.
InvariantReport invariant_report(const Graph& g, const InvariantOptions& options = {});

}  // namespace domrec
