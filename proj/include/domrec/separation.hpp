#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "domrec/budget.hpp"
#include "domrec/domination.hpp"
#include "domrec/graph.hpp"

namespace domrec {

enum class SepMethod { BruteForce, Bottleneck };

std::string_view to_string(SepMethod m);

/// Separation of a minimal-dominating-set family with witnesses. Indices
/// refer to positions in DomFamily::sets.
struct SepReport {
  int sep = 0;
  /// side_a always holds index 0; both sides are sorted and nonempty.
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
  /// (index in side_a, index in side_b) with |union| == sep.
  std::pair<std::size_t, std::size_t> witness_pair{};
  SepMethod method = SepMethod::Bottleneck;
};

inline constexpr std::size_t kBruteForceMaxFamily = 15;

/// Scans every 2-partition of the family and keeps the largest minimum
/// cross-union. Throws DomainError when the family has fewer than 2 or more
/// than kBruteForceMaxFamily members.
SepReport sep_brute_force(const DomFamily& fam);

/// Largest edge of a minimum spanning tree of the complete graph on the
/// family weighted by |X u Y|; removing that edge from the tree yields the
/// witness partition.
SepReport sep_bottleneck(const DomFamily& fam);

/// Minimum |X u Y| over pairs straddling the partition; used to validate
/// witnesses independently of how they were produced.
int partition_separation(const DomFamily& fam, const std::vector<std::size_t>& side_a,
                         const std::vector<std::size_t>& side_b);

struct Theorem3Evidence {
  bool agree = false;
  int d0 = 0;
  int Gamma = 0;
  int gamma = 0;
  std::size_t family_size = 0;
  SepReport sep;
};

/// Computes d0 directly and via the bottleneck separation and compares.
Theorem3Evidence check_theorem3(const Graph& g, const Budget& budget = {});

}  // namespace domrec
