#include "domrec/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace domrec {

Budget Budget::from_env() {
  Budget b;
  if (const char* raw = std::getenv("DOMREC_BUDGET")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) b.max_work = value;
  }
  return b;
}

}  // namespace domrec
