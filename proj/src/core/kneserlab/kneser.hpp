#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneserlab/limits.hpp"
#include "kneserlab/setcore.hpp"

namespace kneserlab {

enum class Variant { set_edges, multiset_edges };

std::string_view variant_name(Variant v);  // "set" / "multiset"

/// r-uniform hypergraph on nodes 1..m. Edges are sorted id sequences of
/// length r, stored in lexicographic order. For set_edges every edge has r
/// distinct ids; for multiset_edges repeats are allowed but every edge has
/// at least two distinct ids.
class Hypergraph {
 public:
  struct Origin {
    SetSystem system;
    int s;
  };

  /// Canonicalises each edge and the edge order; throws InvalidArgument on
  /// malformed or repeated edges.
  Hypergraph(int m, int r, Variant variant, std::vector<std::vector<int>> edges,
             std::optional<Origin> origin = std::nullopt);

  int node_count() const noexcept { return m_; }
  int uniformity() const noexcept { return r_; }
  Variant variant() const noexcept { return variant_; }
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  const std::optional<Origin>& origin() const noexcept { return origin_; }

  bool has_edge(std::vector<int> ids) const;  // any order
  /// Nodes contained in no edge (allowed; reported as a diagnostic).
  std::vector<int> isolated_nodes() const;

 private:
  int m_;
  int r_;
  Variant variant_;
  std::vector<std::vector<int>> edges_;
  std::optional<Origin> origin_;
};

/// Multiplicity-free Kneser hypergraph: r-subsets of [m] whose sets are
/// s-disjoint. Requires 1 <= s < r <= m.
Hypergraph build_kg(const SetSystem& system, int r, int s,
                    std::uint64_t candidate_cap = kDefaultEdgeCandidateCap);

/// Kneser hypergraph with multiplicities: r-multisets with support >= 2
/// whose sets (with multiplicity) are s-disjoint. Requires 1 <= s < r.
Hypergraph build_KG(const SetSystem& system, int r, int s,
                    std::uint64_t candidate_cap = kDefaultEdgeCandidateCap);

inline Hypergraph build_kneser(const SetSystem& system, int r, int s, Variant v) {
  return v == Variant::set_edges ? build_kg(system, r, s) : build_KG(system, r, s);
}

/// `nodes <m>`, `r <r>`, `variant set|multiset`, then `edge <ids>` lines.
std::string serialize(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

}  // namespace kneserlab
