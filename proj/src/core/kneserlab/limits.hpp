#pragma once

#include <cstddef>
#include <cstdint>

namespace kneserlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultEdgeCandidateCap = 10'000'000;
inline constexpr std::size_t kDefaultMaxFaces = 2'000'000;
inline constexpr std::size_t kDefaultMaxNonzeros = 5'000'000;

/// Branch-node budget for the exact solvers. Honours KNESERLAB_NODE_BUDGET
/// when set to a positive integer, otherwise kDefaultNodeBudget.
std::uint64_t node_budget_from_env();

/// Size guards for complex construction and homology.
struct ComplexGuard {
  std::size_t max_faces = kDefaultMaxFaces;
  std::size_t max_nonzeros = kDefaultMaxNonzeros;
};

}  // namespace kneserlab
