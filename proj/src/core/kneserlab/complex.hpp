#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kneserlab/limits.hpp"

namespace kneserlab {

/// Generator of a cyclic group action on the vertices: vertex v maps to
/// image[v], and applying it `order` times is the identity.
struct CyclicShift {
  std::vector<int> image;
  int order = 1;
};

/// Finite abstract simplicial complex on vertices 0..V-1. All faces are
/// stored, grouped by dimension, each group in lexicographic order of the
/// sorted vertex lists. The empty face is implicit.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// `faces` must already be hereditary (checked); duplicates are merged.
  /// Every labelled vertex must occur as a 0-face.
  static SimplicialComplex from_faces(std::vector<std::string> labels,
                                      std::vector<std::vector<int>> faces,
                                      const ComplexGuard& guard = {});

  /// Downward closure of `facets`.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       std::vector<std::vector<int>> facets,
                                       const ComplexGuard& guard = {});

  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  int dim() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const noexcept { return faces_.empty(); }
  std::size_t face_count(int d) const;
  std::size_t total_faces() const;
  std::vector<std::size_t> f_vector() const;

  std::span<const int> face(int d, std::size_t i) const;
  /// Position of a sorted vertex list within its dimension, if it is a face.
  std::optional<std::size_t> index_of(std::span<const int> face) const;
  bool contains(std::span<const int> face) const { return face.empty() || index_of(face).has_value(); }

  std::vector<std::vector<int>> facets() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const std::optional<CyclicShift>& shift() const noexcept { return shift_; }
  /// Attaches a vertex permutation generating a Z_order action. The map is
  /// checked to be a bijection of order dividing `order`; simpliciality is
  /// checked separately by check_action.
  void set_shift(CyclicShift shift);

  /// Z_r-index when known by construction (full tuple-poset order complexes).
  std::optional<int> known_index;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> faces_;  // faces_[d]: stride d+1
  std::optional<CyclicShift> shift_;
};

/// `vertex <id> <label>` lines, then `facet <ids>` lines in canonical order.
/// Vertex ids are 0-based.
std::string serialize(const SimplicialComplex& k);
SimplicialComplex parse_complex(std::string_view text);

}  // namespace kneserlab
