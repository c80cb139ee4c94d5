#include "kneserlab/topo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_set>

#include "kneserlab/defect.hpp"
#include "kneserlab/error.hpp"

namespace kneserlab {

namespace {

CyclicShift copy_shift(int count, int r) {
  CyclicShift shift;
  shift.order = r;
  shift.image.resize(static_cast<std::size_t>(count * r));
  for (int j = 0; j < r; ++j)
    for (int x = 0; x < count; ++x)
      shift.image[static_cast<std::size_t>(j * count + x)] = ((j + 1) % r) * count + x;
  return shift;
}

std::vector<std::string> copy_labels(int count, int r) {
  std::vector<std::string> labels;
  for (int j = 1; j <= r; ++j)
    for (int x = 1; x <= count; ++x) labels.push_back(std::to_string(j) + ":" + std::to_string(x));
  return labels;
}

// Vertex ids of the tuple (U_1..U_r) in an r-copy complex over [count].
std::vector<int> copy_face(std::span<const Mask> parts, int count) {
  std::vector<int> face;
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (int x : elements_of(parts[j])) face.push_back(static_cast<int>(j) * count + x - 1);
  return face;
}

SubsetTuple rotate(const SubsetTuple& t) {
  SubsetTuple out;
  const std::size_t r = t.parts.size();
  out.parts.resize(r);
  for (std::size_t j = 0; j < r; ++j) out.parts[(j + 1) % r] = t.parts[j];
  return out;
}

std::vector<Mask> rotate(std::span<const Mask> parts) {
  std::vector<Mask> out(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) out[(j + 1) % parts.size()] = parts[j];
  return out;
}

std::string tuple_key(const SubsetTuple& t) {
  return std::string(reinterpret_cast<const char*>(t.parts.data()), t.parts.size() * sizeof(Mask));
}

// Sorted multisets of node ids (entries 1..62, length <= 10) packed base 64.
using MultisetKey = std::uint64_t;

MultisetKey pack(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  MultisetKey key = 0;
  for (int v : ids) key = key * 64 + static_cast<MultisetKey>(v);
  return key;
}

inline constexpr int kMaxBoxArity = 10;

struct EdgeIndex {
  std::unordered_set<MultisetKey> edges;
  std::vector<std::unordered_set<MultisetKey>> partial;  // partial[k]: sub-multisets of size k

  explicit EdgeIndex(const Hypergraph& h) : partial(static_cast<std::size_t>(h.uniformity()) + 1) {
    const int r = h.uniformity();
    for (const auto& e : h.edges()) {
      edges.insert(pack(e));
      for (std::uint32_t bits = 1; bits < (1u << r); ++bits) {
        std::vector<int> sub;
        for (int i = 0; i < r; ++i)
          if (bits >> i & 1) sub.push_back(e[static_cast<std::size_t>(i)]);
        partial[sub.size()].insert(pack(std::move(sub)));
      }
    }
  }
};

void check_box_size(int m, int r, const ComplexGuard& guard) {
  if (r > kMaxBoxArity) throw ResourceLimit("box complex supports r <= 10");
  if (m > kMaxGroundSize) throw ResourceLimit("box complex supports at most 62 nodes");
  if (box_complex_size_estimate(m, r) > static_cast<double>(guard.max_faces))
    throw ResourceLimit("box complex would exceed face guard");
}

}  // namespace

// ---------------------------------------------------------------------------

SimplicialComplex deleted_join_simplex(int n, int r, int w, const ComplexGuard& guard) {
  if (n < 1 || r < 2 || w < 2 || w > r) throw InvalidArgument("deleted join needs n >= 1 and 2 <= w <= r");
  if (r > 30) throw ResourceLimit("deleted join supports r <= 30");
  std::vector<std::uint32_t> choices;  // which parts receive an element
  for (std::uint32_t c = 0; c < (1u << r); ++c)
    if (std::popcount(c) <= w - 1) choices.push_back(c);
  if (std::pow(static_cast<double>(choices.size()), n) - 1 > static_cast<double>(guard.max_faces))
    throw ResourceLimit("deleted join would exceed face guard");

  std::vector<std::vector<int>> faces;
  std::vector<int> current;
  std::function<void(int)> walk = [&](int e) {
    if (e == n) {
      if (!current.empty()) faces.push_back(current);
      return;
    }
    for (std::uint32_t c : choices) {
      const std::size_t mark = current.size();
      for (int j = 0; j < r; ++j)
        if (c >> j & 1) current.push_back(j * n + e);
      walk(e + 1);
      current.resize(mark);
    }
  };
  walk(0);
  auto k = SimplicialComplex::from_faces(copy_labels(n, r), std::move(faces), guard);
  k.set_shift(copy_shift(n, r));
  return k;
}

SimplicialComplex colour_complex(int m, int r, const ComplexGuard& guard) {
  if (m < 1 || r < 1) throw InvalidArgument("colour complex needs m, r >= 1");
  if (r == 1) return SimplicialComplex{};  // C_1 nonempty and empty at once
  return deleted_join_simplex(m, r, r, guard);
}

double box_complex_size_estimate(int m, int r) {
  // Tuples with at least one empty part, by inclusion-exclusion, minus the
  // all-empty tuple.
  double total = 0;
  double binom = 1;
  for (int i = 1; i <= r; ++i) {
    binom = binom * (r - i + 1) / i;
    total += (i % 2 == 1 ? 1 : -1) * binom * std::pow(2.0, static_cast<double>(m) * (r - i));
  }
  return total - 1;
}

bool is_box_face(const Hypergraph& h, std::span<const Mask> parts) {
  Mask all = 0;
  bool some_empty = false;
  for (Mask p : parts) {
    all |= p;
    some_empty = some_empty || p == 0;
  }
  if (all == 0) return false;
  if (some_empty) return true;
  std::vector<int> pick;
  std::function<bool(std::size_t)> walk = [&](std::size_t j) -> bool {
    if (j == parts.size()) return h.has_edge(pick);
    for (int v : elements_of(parts[j])) {
      pick.push_back(v);
      const bool ok = walk(j + 1);
      pick.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return walk(0);
}

SimplicialComplex box_complex(const Hypergraph& h, const ComplexGuard& guard) {
  const int m = h.node_count();
  const int r = h.uniformity();
  check_box_size(m, r, guard);
  const Mask all_nodes = m == 0 ? 0 : (Mask{1} << m) - 1;

  std::vector<std::vector<int>> faces;
  std::vector<Mask> parts(static_cast<std::size_t>(r), 0);

  // Faces with an empty part.
  std::function<void(int, bool)> with_empty = [&](int j, bool any_empty) {
    if (j == r) {
      if (!any_empty) return;
      Mask u = 0;
      for (Mask p : parts) u |= p;
      if (u != 0) faces.push_back(copy_face(parts, m));
      return;
    }
    if (j == r - 1 && !any_empty) {
      parts[static_cast<std::size_t>(j)] = 0;
      with_empty(j + 1, true);
      return;
    }
    for (Mask u = 0; u <= all_nodes; ++u) {
      parts[static_cast<std::size_t>(j)] = u;
      with_empty(j + 1, any_empty || u == 0);
      if (faces.size() > guard.max_faces) throw ResourceLimit("box complex exceeds face guard");
    }
    parts[static_cast<std::size_t>(j)] = 0;
  };
  with_empty(0, false);

  // Faces with all parts nonempty: part j may hold any nonempty subset of the
  // nodes v for which every partial transversal extended by v is a
  // sub-multiset of an edge (an edge at the last part).
  const EdgeIndex index(h);
  std::function<void(int, const std::vector<std::vector<int>>&)> full =
      [&](int j, const std::vector<std::vector<int>>& partials) {
        if (j == r) {
          faces.push_back(copy_face(parts, m));
          if (faces.size() > guard.max_faces) throw ResourceLimit("box complex exceeds face guard");
          return;
        }
        const auto& target = j + 1 == r ? index.edges : index.partial[static_cast<std::size_t>(j + 1)];
        Mask candidates = 0;
        for (int v = 1; v <= m; ++v) {
          bool ok = true;
          for (const auto& t : partials) {
            auto grown = t;
            grown.push_back(v);
            if (!target.contains(pack(std::move(grown)))) {
              ok = false;
              break;
            }
          }
          if (ok) candidates |= element_bit(v);
        }
        for (Mask u = candidates; u != 0; u = (u - 1) & candidates) {
          parts[static_cast<std::size_t>(j)] = u;
          std::set<std::vector<int>> next;
          for (const auto& t : partials)
            for (int v : elements_of(u)) {
              auto grown = t;
              grown.push_back(v);
              std::sort(grown.begin(), grown.end());
              next.insert(std::move(grown));
            }
          full(j + 1, {next.begin(), next.end()});
        }
        parts[static_cast<std::size_t>(j)] = 0;
      };
  if (m > 0) full(0, {std::vector<int>{}});

  auto k = SimplicialComplex::from_faces(copy_labels(m, r), std::move(faces), guard);
  k.set_shift(copy_shift(m, r));
  return k;
}

// ---------------------------------------------------------------------------

Poset::Poset(int n, int r, int s, std::vector<SubsetTuple> elements, bool full)
    : n_(n), r_(r), s_(s), full_(full), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), [](const SubsetTuple& a, const SubsetTuple& b) {
    const int sa = a.total_size();
    const int sb = b.total_size();
    return sa != sb ? sa < sb : a < b;
  });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (static_cast<int>(elements_[i].parts.size()) != r) throw InvalidArgument("tuple of wrong arity");
    if (!index_.emplace(tuple_key(elements_[i]), i).second) throw InvalidArgument("repeated poset element");
  }
  // Order axioms on small posets; antisymmetry follows from distinctness.
  if (elements_.size() <= 128) {
    for (std::size_t a = 0; a < size(); ++a) {
      if (!less_equal(a, a)) throw VerificationFailure("poset order is not reflexive");
      for (std::size_t b = 0; b < size(); ++b) {
        if (a != b && less_equal(a, b) && less_equal(b, a)) throw VerificationFailure("poset order is not antisymmetric");
        if (a > b && less_equal(a, b)) throw VerificationFailure("element order is not a linear extension");
        for (std::size_t c = 0; c < size(); ++c)
          if (less_equal(a, b) && less_equal(b, c) && !less_equal(a, c))
            throw VerificationFailure("poset order is not transitive");
      }
    }
  }
}

bool Poset::less_equal(std::size_t a, std::size_t b) const {
  const auto& x = elements_[a].parts;
  const auto& y = elements_[b].parts;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!is_subset(x[j], y[j])) return false;
  return true;
}

std::optional<std::size_t> Poset::index_of(const SubsetTuple& t) const {
  auto it = index_.find(tuple_key(t));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Poset tuple_poset(int n, int r, int s, std::size_t max_elements) {
  if (n < 1 || n > kMaxGroundSize || s < 1 || s >= r || r > 30)
    throw InvalidArgument("tuple poset needs 1 <= s < r and 1 <= n <= 62");
  std::vector<std::uint32_t> choices;
  for (std::uint32_t c = 0; c < (1u << r); ++c)
    if (std::popcount(c) <= s) choices.push_back(c);
  if (std::pow(static_cast<double>(choices.size()), n) - 1 > static_cast<double>(max_elements))
    throw ResourceLimit("tuple poset exceeds element guard");

  std::vector<SubsetTuple> elements;
  SubsetTuple current{std::vector<Mask>(static_cast<std::size_t>(r), 0)};
  std::function<void(int)> walk = [&](int e) {
    if (e > n) {
      if (current.total_size() > 0) elements.push_back(current);
      return;
    }
    for (std::uint32_t c : choices) {
      for (int j = 0; j < r; ++j)
        if (c >> j & 1) current.parts[static_cast<std::size_t>(j)] |= element_bit(e);
      walk(e + 1);
      for (int j = 0; j < r; ++j) current.parts[static_cast<std::size_t>(j)] &= ~element_bit(e);
    }
  };
  walk(1);
  return Poset(n, r, s, std::move(elements), true);
}

Poset restricted_tuple_poset(const SetSystem& system, int r, int s, int cd, std::size_t max_elements) {
  const int n = system.ground_size();
  if (cd < 0 || cd > n * s) throw InvalidArgument("defect value out of range");
  const Poset full = tuple_poset(n, r, s, max_elements);
  const int threshold = n * s - cd + 1;
  std::vector<SubsetTuple> kept;
  for (const auto& t : full.elements()) {
    if (t.total_size() < threshold) continue;
    bool contains_member = false;
    for (Mask part : t.parts) contains_member = contains_member || !is_template_free(part, system);
    if (!contains_member)
      throw VerificationFailure("tuple " + format_tuple(t) + " above the threshold contains no member");
    kept.push_back(t);
  }
  return Poset(n, r, s, std::move(kept), false);
}

std::string format_tuple(const SubsetTuple& t) {
  std::string out = "(";
  for (std::size_t j = 0; j < t.parts.size(); ++j) {
    if (j > 0) out += '|';
    if (t.parts[j] == 0) {
      out += '-';
      continue;
    }
    bool first = true;
    for (int e : elements_of(t.parts[j])) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
  }
  return out + ")";
}

namespace {

// All chains of a finite poset whose elements 0..N-1 are listed along a
// linear extension; `above[i]` lists the j > i with i < j.
std::vector<std::vector<int>> enumerate_chains(const std::vector<std::vector<int>>& above,
                                               const ComplexGuard& guard) {
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  std::function<void(int)> walk = [&](int i) {
    chain.push_back(i);
    chains.push_back(chain);
    if (chains.size() > guard.max_faces) throw ResourceLimit("order complex exceeds face guard");
    for (int j : above[static_cast<std::size_t>(i)]) walk(j);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < above.size(); ++i) walk(static_cast<int>(i));
  return chains;
}

}  // namespace

SimplicialComplex order_complex(const Poset& p, const ComplexGuard& guard) {
  std::vector<std::vector<int>> above(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.less_equal(i, j)) above[i].push_back(static_cast<int>(j));
  std::vector<std::string> labels;
  labels.reserve(p.size());
  for (const auto& t : p.elements()) labels.push_back(format_tuple(t));
  auto k = SimplicialComplex::from_faces(std::move(labels), enumerate_chains(above, guard), guard);

  CyclicShift shift;
  shift.order = p.arity();
  bool closed = true;
  for (const auto& t : p.elements()) {
    auto image = p.index_of(rotate(t));
    if (!image) {
      closed = false;
      break;
    }
    shift.image.push_back(static_cast<int>(*image));
  }
  if (closed && !p.elements().empty()) k.set_shift(std::move(shift));
  if (p.is_full()) k.known_index = p.ground_size() * p.disjointness() - 1;
  return k;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, const ComplexGuard& guard) {
  if (k.total_faces() > guard.max_faces) throw ResourceLimit("subdivision exceeds face guard");
  std::vector<std::size_t> offset(static_cast<std::size_t>(k.dim() + 2), 0);
  for (int d = 0; d <= k.dim(); ++d)
    offset[static_cast<std::size_t>(d + 1)] = offset[static_cast<std::size_t>(d)] + k.face_count(d);
  auto global = [&](std::span<const int> f) {
    const int d = static_cast<int>(f.size()) - 1;
    return static_cast<int>(offset[static_cast<std::size_t>(d)] + *k.index_of(f));
  };

  std::vector<std::string> labels;
  for (int d = 0; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.face_count(d); ++i) {
      std::string label = "{";
      bool first = true;
      for (int v : k.face(d, i)) {
        if (!first) label += ',';
        label += k.labels()[static_cast<std::size_t>(v)];
        first = false;
      }
      labels.push_back(label + "}");
    }

  // Chains grow downwards: from a face to any proper nonempty subface.
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  std::vector<int> sub;
  std::function<void(std::span<const int>)> walk = [&](std::span<const int> f) {
    chain.push_back(global(f));
    chains.push_back(chain);
    if (chains.size() > guard.max_faces) throw ResourceLimit("subdivision exceeds face guard");
    const std::uint32_t all = (1u << f.size()) - 1;
    for (std::uint32_t bits = 1; bits < all; ++bits) {
      sub.clear();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (bits >> i & 1) sub.push_back(f[i]);
      const int d = static_cast<int>(sub.size()) - 1;
      walk(k.face(d, *k.index_of(sub)));
    }
    chain.pop_back();
  };
  for (int d = 0; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.face_count(d); ++i) walk(k.face(d, i));

  auto sd = SimplicialComplex::from_faces(std::move(labels), std::move(chains), guard);
  if (const auto& shift = k.shift()) {
    CyclicShift induced;
    induced.order = shift->order;
    std::vector<int> image;
    for (int d = 0; d <= k.dim(); ++d)
      for (std::size_t i = 0; i < k.face_count(d); ++i) {
        image.clear();
        for (int v : k.face(d, i)) image.push_back(shift->image[static_cast<std::size_t>(v)]);
        std::sort(image.begin(), image.end());
        if (!k.contains(image)) throw VerificationFailure("shift does not map faces to faces");
        induced.image.push_back(global(image));
      }
    sd.set_shift(std::move(induced));
  }
  return sd;
}

// ---------------------------------------------------------------------------

std::string_view action_name(ActionKind a) {
  switch (a) {
    case ActionKind::free: return "free";
    case ActionKind::fixed_point_free: return "fixed_point_free";
    case ActionKind::neither: return "neither";
  }
  return "neither";
}

ActionKind check_action(const SimplicialComplex& k, int r) {
  const auto& shift = k.shift();
  if (!shift) throw InvalidArgument("complex carries no cyclic shift");
  if (r < 2) throw InvalidArgument("group order must be at least 2");
  for (std::size_t v = 0; v < shift->image.size(); ++v) {
    std::size_t y = v;
    for (int i = 0; i < r; ++i) y = static_cast<std::size_t>(shift->image[y]);
    if (y != v) throw InvalidArgument("shift order does not divide r");
  }
  bool invariant_under_some = false;
  bool invariant_under_generator = false;
  std::vector<int> image;
  std::vector<int> current;
  for (int d = 0; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.face_count(d); ++i) {
      auto f = k.face(d, i);
      current.assign(f.begin(), f.end());
      for (int power = 1; power < r; ++power) {
        image.clear();
        for (int v : current) image.push_back(shift->image[static_cast<std::size_t>(v)]);
        std::sort(image.begin(), image.end());
        if (!k.contains(image)) throw VerificationFailure("shift does not map faces to faces");
        if (std::ranges::equal(image, f)) {
          invariant_under_some = true;
          if (power == 1) invariant_under_generator = true;
        }
        current = image;
      }
    }
  if (!invariant_under_some) return ActionKind::free;
  if (!invariant_under_generator) return ActionKind::fixed_point_free;
  return ActionKind::neither;
}

std::optional<std::pair<int, int>> prime_power(int r) {
  if (r < 2) return std::nullopt;
  int p = 2;
  while (r % p != 0) ++p;
  int t = 0;
  while (r % p == 0) {
    r /= p;
    ++t;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, t);
}

std::optional<TopoBound> topo_bound(const Hypergraph& h, const ComplexGuard& guard) {
  const int r = h.uniformity();
  const auto pp = prime_power(r);
  if (!pp) return std::nullopt;
  const auto box = box_complex(h, guard);
  TopoBound out;
  out.p = pp->first;
  out.faces = box.total_faces();
  out.betti = homology(box, out.p, guard);
  if (out.betti.acyclic) throw VerificationFailure("box complex is Z_p-acyclic");
  out.connectivity = out.betti.connectivity;
  const int numerator = out.connectivity + 2;
  out.bound = (numerator + r - 2) / (r - 1);
  return out;
}

IndexBounds index_bounds(const SimplicialComplex& k, int r, int p, const ComplexGuard& guard) {
  if (check_action(k, r) != ActionKind::free) throw InvalidArgument("index bounds need a free action");
  const auto betti = homology(k, p, guard);
  return IndexBounds{betti.connectivity + 1, k.dim(), k.known_index};
}

// ---------------------------------------------------------------------------

ColourMapReport verify_colour_map(const Hypergraph& h, const Colouring& c, const ComplexGuard& guard) {
  if (!is_proper(h, c)) throw InvalidArgument("colouring is not proper");
  const int m = h.node_count();
  const int r = h.uniformity();
  const int k = std::max(c.k, 1);
  const auto box = box_complex(h, guard);
  const auto target = colour_complex(k, r, guard);

  auto map_vertex = [&](int x) {
    const int j = x / m;
    const int v = x % m;
    return j * k + c.colours[static_cast<std::size_t>(v)] - 1;
  };

  ColourMapReport report;
  report.colours = k;
  report.box_faces = box.total_faces();
  report.dim_bound = (r - 1) * k - 1;
  report.simplicial = true;
  std::vector<int> image;
  for (int d = 0; d <= box.dim(); ++d)
    for (std::size_t i = 0; i < box.face_count(d); ++i) {
      image.clear();
      for (int x : box.face(d, i)) image.push_back(map_vertex(x));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!target.contains(image)) report.simplicial = false;
      report.image_dim = std::max(report.image_dim, static_cast<int>(image.size()) - 1);
    }

  report.equivariant = box.shift().has_value() && target.shift().has_value();
  if (report.equivariant)
    for (int x = 0; x < box.vertex_count(); ++x)
      if (map_vertex(box.shift()->image[static_cast<std::size_t>(x)]) !=
          target.shift()->image[static_cast<std::size_t>(map_vertex(x))])
        report.equivariant = false;
  return report;
}

namespace {

std::vector<Mask> members_inside(const SubsetTuple& u, const SetSystem& system) {
  std::vector<Mask> out(u.parts.size(), 0);
  for (std::size_t j = 0; j < u.parts.size(); ++j)
    for (int node = 1; node <= system.size(); ++node)
      if (is_subset(system[node - 1], u.parts[j])) out[j] |= element_bit(node);
  return out;
}

bool componentwise_subset(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!is_subset(a[j], b[j])) return false;
  return true;
}

}  // namespace

DefectMapReport verify_defect_map(const SetSystem& system, int r, int s, const ComplexGuard& guard) {
  const int n = system.ground_size();
  DefectMapReport report;
  report.cd = colourability_defect(system, r, s).value;
  report.threshold = n * s - report.cd + 1;
  report.dim_L_bound = n * s - report.cd - 1;

  const Poset full = tuple_poset(n, r, s);
  const Poset restricted = restricted_tuple_poset(system, r, s, report.cd);
  report.poset_size = full.size();
  report.restricted_size = restricted.size();
  const Hypergraph kg = build_KG(system, r, s);

  // Member image of every vertex of the restricted order complex.
  std::vector<std::vector<Mask>> images;
  images.reserve(restricted.size());
  report.well_defined = true;
  report.equivariant = true;
  std::set<std::vector<Mask>> distinct;
  for (const auto& u : restricted.elements()) {
    auto image = members_inside(u, system);
    if (!is_box_face(kg, image)) report.well_defined = false;
    auto rotated = restricted.index_of(rotate(u));
    if (!rotated || members_inside(restricted[*rotated], system) != rotate(image)) report.equivariant = false;
    distinct.insert(image);
    images.push_back(std::move(image));
  }
  report.image_size = distinct.size();
  const auto box = box_complex(kg, guard);
  report.box_faces = box.total_faces();
  report.surjective = report.well_defined && report.image_size == report.box_faces;

  // Chains to chains: g is monotone along every cover relation of the
  // restricted poset, and along every chain when the order complex fits.
  report.simplicial = true;
  for (std::size_t i = 0; i < restricted.size(); ++i) {
    const auto& u = restricted[i];
    for (int j = 0; j < r; ++j)
      for (int e = 1; e <= n; ++e) {
        if (u.parts[static_cast<std::size_t>(j)] & element_bit(e)) continue;
        SubsetTuple up = u;
        up.parts[static_cast<std::size_t>(j)] |= element_bit(e);
        if (auto w = restricted.index_of(up); w && !componentwise_subset(images[i], images[*w]))
          report.simplicial = false;
      }
  }
  std::optional<SimplicialComplex> restricted_complex;
  try {
    restricted_complex = order_complex(restricted, guard);
  } catch (const ResourceLimit&) {
  }
  if (restricted_complex) {
    report.facewise_simplicial = true;
    for (int d = 1; d <= restricted_complex->dim(); ++d)
      for (std::size_t i = 0; i < restricted_complex->face_count(d); ++i) {
        auto chain = restricted_complex->face(d, i);
        for (std::size_t q = 1; q < chain.size(); ++q)
          if (!componentwise_subset(images[static_cast<std::size_t>(chain[q - 1])],
                                    images[static_cast<std::size_t>(chain[q])]))
            report.simplicial = false;
      }
  }

  // L: the order complex of the complement, a down-set of the graded poset.
  std::vector<SubsetTuple> complement;
  for (const auto& t : full.elements())
    if (t.total_size() < report.threshold) complement.push_back(t);
  const Poset low(n, r, s, complement, false);
  std::vector<int> longest(low.size(), 1);
  for (std::size_t i = 0; i < low.size(); ++i) {
    for (int j = 0; j < r; ++j)
      for (int e : elements_of(low[i].parts[static_cast<std::size_t>(j)])) {
        SubsetTuple down = low[i];
        down.parts[static_cast<std::size_t>(j)] &= ~element_bit(e);
        if (auto w = low.index_of(down))
          longest[i] = std::max(longest[i], longest[*w] + 1);
      }
    report.dim_L = std::max(report.dim_L, longest[i] - 1);
  }

  // Join containment: the vertices of P split into those of P_T and L, and
  // every chain of P splits into a chain of each.
  report.containment = restricted.size() + low.size() == full.size();
  try {
    const auto whole = order_complex(full, guard);
    const auto lower = order_complex(low, guard);
    if (!restricted_complex) restricted_complex = order_complex(restricted, guard);
    std::vector<int> upper_part;
    std::vector<int> lower_part;
    for (int d = 0; d <= whole.dim() && report.containment; ++d)
      for (std::size_t i = 0; i < whole.face_count(d); ++i) {
        upper_part.clear();
        lower_part.clear();
        for (int v : whole.face(d, i)) {
          const auto& t = full[static_cast<std::size_t>(v)];
          if (auto a = restricted.index_of(t)) upper_part.push_back(static_cast<int>(*a));
          else if (auto b = low.index_of(t)) lower_part.push_back(static_cast<int>(*b));
          else report.containment = false;
        }
        std::sort(upper_part.begin(), upper_part.end());
        std::sort(lower_part.begin(), lower_part.end());
        if (!restricted_complex->contains(upper_part) || !lower.contains(lower_part)) report.containment = false;
      }
    report.facewise_containment = true;
  } catch (const ResourceLimit&) {
  }
  return report;
}

}  // namespace kneserlab
