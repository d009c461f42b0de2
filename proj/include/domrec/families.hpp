#pragma once

#include <string>
#include <vector>

#include "domrec/budget.hpp"
#include "domrec/graph.hpp"

namespace domrec {

/// Frozen vertex numbering of the clique-and-matching construction:
/// u_0 -> 0, u_j -> j, v_{i,j} -> k + (i-1)k + j, for 1 <= i <= r, 1 <= j <= k.
struct GkrLayout {
  int k = 0;
  int r = 0;

  int order() const { return k * (r + 1) + 1; }
  int u(int j) const { return j; }  // j = 0 is the hub u_0
  int v(int i, int j) const { return k + (i - 1) * k + j; }

  VertexSet U() const;   // {u_1..u_k}
  VertexSet U0() const;  // U plus u_0
  VertexSet V(int i) const;
};

/// G_{k,r} plus w_i -> k(r+1) + i, each w_i joined to U_0 and V_i.
struct QkrLayout : GkrLayout {
  int order() const { return GkrLayout::order() + r; }
  int w(int i) const { return GkrLayout::order() - 1 + i; }

  VertexSet Wset() const;   // {w_1..w_r}
  VertexSet W(int i) const;  // V_i plus w_i
};

/// Throws DomainError unless k >= 3 and 1 <= r <= k-1.
void validate_construction_parameters(int k, int r);

struct GkrGraph {
  Graph graph;
  GkrLayout layout;
};
struct QkrGraph {
  Graph graph;
  QkrLayout layout;
};

GkrGraph generate_gkr(int k, int r);
QkrGraph generate_qkr(int k, int r);

/// Sets meeting U_0 in one vertex and every V_i in one vertex, canonical order.
std::vector<VertexSet> family_X(const GkrLayout& layout);
/// Sets meeting every W_i in one vertex and containing at least one w_i.
std::vector<VertexSet> family_W(const QkrLayout& layout);

/// {u_1..u_{k-1}} together with {v_{1,k}..v_{r-1,k}}: irredundant but not
/// dominating, so IR(G_{k,r}) >= k + r - 2.
VertexSet note_irredundant_witness(const GkrLayout& layout);

struct LemmaViolation {
  std::string part;  // e.g. "at-most-one-per-V"
  std::string detail;
  VertexSet counterexample;
};

struct LemmaCheck {
  int k = 0;
  int r = 0;
  int gamma = 0;
  int Gamma = 0;
  std::size_t family_size = 0;
  std::size_t expected_family_size = 0;
  std::vector<std::string> checked;  // every part that was evaluated
  std::vector<LemmaViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Enumerates the minimal dominating sets of G_{k,r} and checks each of
/// them against the structural properties (meets U_0, at most one vertex per
/// V_i, ...), plus the characterisation of the family as X together with U.
LemmaCheck verify_gkr_lemmas(int k, int r, const Budget& budget = {});
/// Same for Q_{k,r}, with the family X, W, U.
LemmaCheck verify_qkr_lemmas(int k, int r, const Budget& budget = {});

// Small standard families. Vertex ids are 0-based.
Graph complete_graph(int n);
Graph empty_graph(int n);
/// Centre 0, leaves 1..n.
Graph star_graph(int n);
Graph path_graph(int n);
/// Requires n >= 3.
Graph cycle_graph(int n);

}  // namespace domrec
