#include "kneserlab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace kneserlab {

std::uint64_t node_budget_from_env() {
  if (const char* raw = std::getenv("KNESERLAB_NODE_BUDGET")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) return value;
  }
  return kDefaultNodeBudget;
}

}  // namespace kneserlab
