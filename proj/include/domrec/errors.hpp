#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace domrec {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph6, edge lists, vertex-id lists).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A precondition on the arguments was violated (edgeless graph where an
/// edge is required, construction parameters out of range, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured work limit.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::string what_limit, std::uint64_t limit)
      : Error("budget exceeded: " + what_limit + " (limit " +
              std::to_string(limit) + ")"),
        limit_name_(std::move(what_limit)), limit_(limit) {}

  const std::string& limit_name() const noexcept { return limit_name_; }
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::string limit_name_;
  std::uint64_t limit_;
};

}  // namespace domrec
