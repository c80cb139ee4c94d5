#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneserlab/kneser.hpp"
#include "kneserlab/limits.hpp"

namespace kneserlab {

/// Node colouring; colours[v-1] in 1..k is the colour of node v.
struct Colouring {
  std::vector<int> colours;
  int k = 0;

  static Colouring from(std::vector<int> colours);  // k = max colour
  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Every edge sees at least two colours on its support. Throws
/// InvalidArgument when the colouring does not cover exactly m nodes.
bool is_proper(const Hypergraph& h, const Colouring& c);

/// Lexicographically least proper colouring with at most k colours, if any.
/// Throws ResourceLimit when the node budget runs out.
std::optional<Colouring> k_colourable(const Hypergraph& h, int k,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

struct ChromaticResult {
  int chi = 1;
  Colouring witness;
  bool lower_exhausted = false;  // search with chi-1 colours completed empty
};

ChromaticResult chromatic_number(const Hypergraph& h,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// Kneser's greedy colouring of the 2-subsets of [n] (node order of
/// complete_k_subsets(n, 2)): {a,b} with a < b gets a if a <= n-3, else n-2.
Colouring greedy_pair_colouring(int n);

/// `colour <node> <c>` lines.
std::string format_colouring(const Colouring& c);

}  // namespace kneserlab
