#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "domrec/errors.hpp"

namespace domrec {

/// Upper bound on the work units (search nodes, subsets visited, sets
/// materialized) an exhaustive routine may spend before giving up.
struct Budget {
  static constexpr std::uint64_t kDefaultWork = std::uint64_t{1} << 26;

  std::uint64_t max_work = kDefaultWork;

  /// Default budget, overridden by the DOMREC_BUDGET environment variable
  /// when it holds a positive integer.
  static Budget from_env();
};

/// Counts work against a Budget and throws BudgetExceeded once it is spent.
class WorkMeter {
public:
  WorkMeter(const Budget& budget, std::string what)
      : limit_(budget.max_work), what_(std::move(what)) {}

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_) throw BudgetExceeded(what_, limit_);
  }

  std::uint64_t used() const noexcept { return used_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace domrec
