#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kneserlab {

/// Subset of a ground set [n] as a bitmask; bit (e-1) stands for element e.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 62;

inline constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
inline int cardinality(Mask m) { return std::popcount(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Elements of `m` in ascending order, 1-based.
std::vector<int> elements_of(Mask m);
Mask mask_of(std::span<const int> elements);

/// Ground set [n] plus an ordered family of distinct nonempty subsets.
/// Position i (0-based) in the family is node i+1 of every derived hypergraph.
class SetSystem {
 public:
  /// Throws InvalidArgument on an empty member, an element outside [n], or
  /// a repeated member.
  SetSystem(int n, std::vector<Mask> sets);

  int ground_size() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(sets_.size()); }
  Mask operator[](int i) const { return sets_.at(static_cast<std::size_t>(i)); }
  std::span<const Mask> sets() const noexcept { return sets_; }
  Mask ground_mask() const noexcept { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int n_;
  std::vector<Mask> sets_;
};

/// Ordered r-tuple of subsets of [n]; empty parts are allowed.
struct SubsetTuple {
  std::vector<Mask> parts;

  int total_size() const;
  friend bool operator==(const SubsetTuple&, const SubsetTuple&) = default;
  friend auto operator<=>(const SubsetTuple&, const SubsetTuple&) = default;
};

/// Every element occurs in at most `s` parts; equal parts count separately.
bool is_s_disjoint(std::span<const Mask> parts, int s);
inline bool is_s_disjoint(const SubsetTuple& t, int s) { return is_s_disjoint(t.parts, s); }

/// Sorted r-multiset of node ids with at least two distinct entries.
struct MultisetEdge {
  std::vector<int> entries;

  std::vector<int> support() const;
  friend bool operator==(const MultisetEdge&, const MultisetEdge&) = default;
  friend auto operator<=>(const MultisetEdge&, const MultisetEdge&) = default;
};

/// Throws InvalidArgument when the ids have fewer than two distinct values.
MultisetEdge canonical_multiset(std::vector<int> ids);

/// Instance text: `n <int>` followed by `set <e1> <e2> ...` lines with
/// strictly ascending elements; `#` starts a comment. Throws ParseError.
SetSystem parse_instance(std::string_view text);
std::string serialize(const SetSystem& system);

/// All k-subsets of [n] in lexicographic order.
SetSystem complete_k_subsets(int n, int k);

enum class WorkedFamily { example1, counterexample1 };

/// example1: {1,2},{1,3},{1,4},{1,5},{2,3},{4,5} over [5] (n is ignored).
/// counterexample1: {1,2},...,{1,n},{2,3},{4,5} over [n], n >= 5.
SetSystem worked_family(WorkedFamily family, int n = 5);

/// Applies the permutation elementwise; perm[e-1] is the image of e.
SetSystem relabel(const SetSystem& system, std::span<const int> perm);

/// Human-readable "{1,2}" rendering, used in labels and reports.
std::string format_set(Mask m);

}  // namespace kneserlab
