#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kneserlab/chroma.hpp"
#include "kneserlab/complex.hpp"
#include "kneserlab/homology.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/setcore.hpp"

namespace kneserlab {

// ---------------------------------------------------------------------------
// r-copy complexes. Vertex (copy j, item x) has id j*count + (x-1) and label
// "j:x" (both 1-based in the label). The cyclic shift sends copy j to j+1.

/// r-fold w-wise deleted join of the (n-1)-simplex: tuples (F_1..F_r) of
/// subsets of [n] with nonempty union, every element in at most w-1 parts.
SimplicialComplex deleted_join_simplex(int n, int r, int w, const ComplexGuard& guard = {});

/// Colour complex on m colours: tuples (C_1..C_r) with nonempty union and
/// empty common intersection.
SimplicialComplex colour_complex(int m, int r, const ComplexGuard& guard = {});

/// Box complex of an r-uniform hypergraph. A tuple of node sets with
/// nonempty union is a face when some part is empty, or when every
/// transversal is an edge of the hypergraph.
SimplicialComplex box_complex(const Hypergraph& h, const ComplexGuard& guard = {});

/// Face predicate of the box complex, parts given as node masks (bit v-1).
bool is_box_face(const Hypergraph& h, std::span<const Mask> parts);

// ---------------------------------------------------------------------------
// Tuple posets.

/// Finite set of r-tuples ordered by componentwise inclusion. Elements are
/// kept sorted by total size, then lexicographically, which is a linear
/// extension of the order.
class Poset {
 public:
  Poset(int n, int r, int s, std::vector<SubsetTuple> elements, bool full);

  int ground_size() const noexcept { return n_; }
  int arity() const noexcept { return r_; }
  int disjointness() const noexcept { return s_; }
  bool is_full() const noexcept { return full_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<SubsetTuple>& elements() const noexcept { return elements_; }
  const SubsetTuple& operator[](std::size_t i) const { return elements_[i]; }

  bool less_equal(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const SubsetTuple& t) const;

 private:
  int n_;
  int r_;
  int s_;
  bool full_;
  std::vector<SubsetTuple> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// All s-disjoint r-tuples of subsets of [n] with nonempty union.
Poset tuple_poset(int n, int r, int s, std::size_t max_elements = 200'000);

/// Subposet of tuples with total size >= n*s - cd + 1. Every kept tuple is
/// checked to have a part containing a member of `system`; a failure throws
/// VerificationFailure.
Poset restricted_tuple_poset(const SetSystem& system, int r, int s, int cd,
                             std::size_t max_elements = 200'000);

/// Chains of the poset. Vertex i is poset element i, labelled by its tuple;
/// the cyclic rotation of parts is attached as the shift.
SimplicialComplex order_complex(const Poset& p, const ComplexGuard& guard = {});

/// Order complex of the face poset; the shift, if any, is carried over.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, const ComplexGuard& guard = {});

/// "(1,2|-|3)"
std::string format_tuple(const SubsetTuple& t);

// ---------------------------------------------------------------------------
// Group actions and bounds.

enum class ActionKind { free, fixed_point_free, neither };
std::string_view action_name(ActionKind a);

/// Classifies the attached shift as a Z_r action. Throws InvalidArgument when
/// no shift is attached and VerificationFailure when the shift does not map
/// faces to faces.
ActionKind check_action(const SimplicialComplex& k, int r);

/// (p, t) with r = p^t.
std::optional<std::pair<int, int>> prime_power(int r);

struct TopoBound {
  int p = 0;
  BettiTable betti;
  int connectivity = 0;
  int bound = 0;
  std::size_t faces = 0;
};

/// ceil((l+2)/(r-1)) with l the Z_p connectivity proxy of the box complex;
/// empty when r is not a prime power. Throws ResourceLimit when the box
/// complex would exceed the guard.
std::optional<TopoBound> topo_bound(const Hypergraph& h, const ComplexGuard& guard = {});

/// Number of box-complex faces with at least one empty part; a cheap lower
/// bound on the complex size used to refuse oversized instances up front.
double box_complex_size_estimate(int m, int r);

struct IndexBounds {
  int lower = 0;  // connectivity proxy + 1
  int upper = 0;  // dimension
  std::optional<int> exact;
};

/// Requires a free action (InvalidArgument otherwise).
IndexBounds index_bounds(const SimplicialComplex& k, int r, int p, const ComplexGuard& guard = {});

// ---------------------------------------------------------------------------
// Proof-map verifiers.

struct ColourMapReport {
  int colours = 0;
  std::size_t box_faces = 0;
  bool simplicial = false;
  bool equivariant = false;
  int image_dim = -1;
  int dim_bound = 0;  // (r-1)*k - 1

  bool dim_ok() const { return image_dim <= dim_bound; }
  bool all_pass() const { return simplicial && equivariant && dim_ok(); }
};

/// Builds the colouring-induced map from the box complex to the colour
/// complex and checks it. Throws InvalidArgument for an improper colouring.
ColourMapReport verify_colour_map(const Hypergraph& h, const Colouring& c, const ComplexGuard& guard = {});

struct DefectMapReport {
  int cd = 0;
  int threshold = 0;  // n*s - cd + 1
  std::size_t poset_size = 0;
  std::size_t restricted_size = 0;
  bool well_defined = false;   // every image is a nonempty box face
  bool simplicial = false;     // chains go to chains
  bool facewise_simplicial = false;  // checked on every chain rather than covers
  bool equivariant = false;
  bool surjective = false;     // image hits every face of the box complex
  std::size_t image_size = 0;
  std::size_t box_faces = 0;
  int dim_L = -1;
  int dim_L_bound = 0;         // n*s - cd - 1
  bool containment = false;    // order complex of P inside the join P_T * L
  bool facewise_containment = false;

  bool dim_L_ok() const { return dim_L <= dim_L_bound; }
  /// Checks the lower-bound argument needs: everything except surjectivity.
  bool argument_pass() const { return well_defined && simplicial && equivariant && dim_L_ok() && containment; }
  bool all_pass() const { return argument_pass() && surjective; }
};

/// Mechanical check of the member-image map from the restricted tuple poset
/// into the subdivided box complex of KG, of the dimension bound on the
/// complement subcomplex L, and of the join containment.
DefectMapReport verify_defect_map(const SetSystem& system, int r, int s, const ComplexGuard& guard = {});

}  // namespace kneserlab
