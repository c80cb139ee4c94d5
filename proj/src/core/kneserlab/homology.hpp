#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneserlab/complex.hpp"

namespace kneserlab {

bool is_prime(int p);

/// Sparse column: (row, coefficient in 1..p-1), rows strictly increasing.
using SparseColumn = std::vector<std::pair<int, std::uint32_t>>;

struct BoundaryMatrix {
  int rows = 0;
  std::vector<SparseColumn> columns;
};

/// Augmented simplicial chain complex over Z_p. boundaries[d] is the map
/// C_d -> C_{d-1} for d = 0..dim, where C_{-1} is spanned by the empty face.
/// Bases are the faces of each dimension in the complex's stored order.
struct ChainComplex {
  int p = 2;
  std::vector<BoundaryMatrix> boundaries;
};

ChainComplex chain_complex(const SimplicialComplex& k, int p, const ComplexGuard& guard = {});

/// Checks that every composite boundary map vanishes.
bool boundary_squares_to_zero(const ChainComplex& c);

/// Ranks of boundaries[d] for every d.
std::vector<std::int64_t> boundary_ranks(const ChainComplex& c);

struct BettiTable {
  int p = 2;
  std::vector<std::int64_t> reduced;  // reduced[i] is b~_{i-1}
  /// Largest l with b~_i = 0 for all i <= l; -2 for the empty complex. When
  /// every reduced Betti number vanishes the complex is Z_p-acyclic and this
  /// holds the top dimension.
  int connectivity = -2;
  bool acyclic = false;

  std::int64_t betti(int degree) const;  // 0 outside the stored range
  int top_degree() const { return static_cast<int>(reduced.size()) - 2; }
};

BettiTable homology(const SimplicialComplex& k, int p, const ComplexGuard& guard = {});
BettiTable betti_from_ranks(const SimplicialComplex& k, int p, const std::vector<std::int64_t>& ranks);

/// sum_i (-1)^i f_i == 1 + sum_i (-1)^i b~_i.
bool euler_identity_holds(const SimplicialComplex& k, const BettiTable& b);

/// TSV with header `dim\tbetti`, one row per degree from -1 to dim.
std::string format_betti(const BettiTable& b);

}  // namespace kneserlab
