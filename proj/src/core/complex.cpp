#include "kneserlab/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "kneserlab/error.hpp"

namespace kneserlab {

namespace {

bool lex_less(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_labels(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty() || l.find_first_of(" \t\n") != std::string::npos)
      throw InvalidArgument("vertex labels must be nonempty and contain no whitespace");
    if (!seen.insert(l).second) throw InvalidArgument("duplicate vertex label '" + l + "'");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels,
                                                std::vector<std::vector<int>> faces,
                                                const ComplexGuard& guard) {
  check_labels(labels);
  const int v_count = static_cast<int>(labels.size());
  std::vector<std::vector<std::vector<int>>> by_dim;
  for (auto& f : faces) {
    if (f.empty()) continue;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidArgument("repeated vertex in a face");
    if (f.front() < 0 || f.back() >= v_count) throw InvalidArgument("face vertex out of range");
    const std::size_t d = f.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(std::move(f));
  }
  faces.clear();

  SimplicialComplex k;
  k.labels_ = std::move(labels);
  std::size_t total = 0;
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    auto& group = by_dim[d];
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    total += group.size();
    if (total > guard.max_faces) throw ResourceLimit("complex exceeds face guard");
    std::vector<int> flat;
    flat.reserve(group.size() * (d + 1));
    for (const auto& f : group) flat.insert(flat.end(), f.begin(), f.end());
    group.clear();
    group.shrink_to_fit();
    k.faces_.push_back(std::move(flat));
  }
  while (!k.faces_.empty() && k.faces_.back().empty()) k.faces_.pop_back();

  if (static_cast<int>(k.face_count(0)) != v_count)
    throw InvalidArgument("every labelled vertex must be a face");
  std::vector<int> sub;
  for (int d = 1; d <= k.dim(); ++d) {
    for (std::size_t i = 0; i < k.face_count(d); ++i) {
      auto f = k.face(d, i);
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!k.index_of(sub)) throw InvalidArgument("face family is not hereditary");
      }
    }
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 std::vector<std::vector<int>> facets,
                                                 const ComplexGuard& guard) {
  std::set<std::vector<int>> closure;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.size() > 30) throw ResourceLimit("facet too large to close");
    const std::uint64_t subsets = std::uint64_t{1} << f.size();
    if (closure.size() + subsets > guard.max_faces * 2) throw ResourceLimit("complex exceeds face guard");
    for (std::uint64_t bits = 1; bits < subsets; ++bits) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (bits >> i & 1) sub.push_back(f[i]);
      closure.insert(std::move(sub));
    }
  }
  return from_faces(std::move(labels), {closure.begin(), closure.end()}, guard);
}

std::size_t SimplicialComplex::face_count(int d) const {
  if (d < 0 || d > dim()) return 0;
  return faces_[static_cast<std::size_t>(d)].size() / static_cast<std::size_t>(d + 1);
}

std::size_t SimplicialComplex::total_faces() const {
  std::size_t total = 0;
  for (int d = 0; d <= dim(); ++d) total += face_count(d);
  return total;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int d = 0; d <= dim(); ++d) f.push_back(face_count(d));
  return f;
}

std::span<const int> SimplicialComplex::face(int d, std::size_t i) const {
  const auto width = static_cast<std::size_t>(d + 1);
  return std::span<const int>(faces_[static_cast<std::size_t>(d)]).subspan(i * width, width);
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const int> f) const {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 0 || d > dim()) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = face_count(d);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (lex_less(face(d, mid), f)) lo = mid + 1;
    else hi = mid;
  }
  if (lo < face_count(d) && std::ranges::equal(face(d, lo), f)) return lo;
  return std::nullopt;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<bool>> covered(static_cast<std::size_t>(dim() + 1));
  for (int d = 0; d <= dim(); ++d) covered[static_cast<std::size_t>(d)].assign(face_count(d), false);
  std::vector<int> sub;
  for (int d = 1; d <= dim(); ++d)
    for (std::size_t i = 0; i < face_count(d); ++i) {
      auto f = face(d, i);
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        covered[static_cast<std::size_t>(d - 1)][*index_of(sub)] = true;
      }
    }
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= dim(); ++d)
    for (std::size_t i = 0; i < face_count(d); ++i)
      if (!covered[static_cast<std::size_t>(d)][i]) out.emplace_back(face(d, i).begin(), face(d, i).end());
  std::sort(out.begin(), out.end());
  return out;
}

void SimplicialComplex::set_shift(CyclicShift shift) {
  const std::size_t v = labels_.size();
  if (shift.image.size() != v || shift.order < 1) throw InvalidArgument("shift has wrong size");
  std::vector<bool> hit(v, false);
  for (int x : shift.image) {
    if (x < 0 || static_cast<std::size_t>(x) >= v || hit[static_cast<std::size_t>(x)])
      throw InvalidArgument("shift is not a permutation");
    hit[static_cast<std::size_t>(x)] = true;
  }
  for (std::size_t x = 0; x < v; ++x) {
    std::size_t y = x;
    for (int i = 0; i < shift.order; ++i) y = static_cast<std::size_t>(shift.image[y]);
    if (y != x) throw InvalidArgument("shift does not have the stated order");
  }
  shift_ = std::move(shift);
}

std::string serialize(const SimplicialComplex& k) {
  std::ostringstream out;
  for (int v = 0; v < k.vertex_count(); ++v) out << "vertex " << v << ' ' << k.labels()[static_cast<std::size_t>(v)] << '\n';
  for (const auto& f : k.facets()) {
    out << "facet";
    for (int v : f) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

SimplicialComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> facets;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    if (key == "vertex") {
      int id = -1;
      std::string label;
      if (!(words >> id >> label)) throw ParseError(line_no, "expected 'vertex <id> <label>'");
      if (id != static_cast<int>(labels.size())) throw ParseError(line_no, "vertex ids must be consecutive from 0");
      labels.push_back(label);
    } else if (key == "facet") {
      std::vector<int> f;
      int v = 0;
      while (words >> v) f.push_back(v);
      if (!words.eof() || f.empty()) throw ParseError(line_no, "malformed facet");
      facets.push_back(std::move(f));
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
  }
  try {
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace kneserlab
