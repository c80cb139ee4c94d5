#include "kneserlab/kneser.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kneserlab/error.hpp"

namespace kneserlab {

std::string_view variant_name(Variant v) {
  return v == Variant::set_edges ? "set" : "multiset";
}

Hypergraph::Hypergraph(int m, int r, Variant variant, std::vector<std::vector<int>> edges,
                       std::optional<Origin> origin)
    : m_(m), r_(r), variant_(variant), edges_(std::move(edges)), origin_(std::move(origin)) {
  if (m < 0) throw InvalidArgument("negative node count");
  if (r < 2) throw InvalidArgument("uniformity must be at least 2");
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != r) throw InvalidArgument("edge of wrong size");
    std::sort(e.begin(), e.end());
    if (e.front() < 1 || e.back() > m) throw InvalidArgument("edge node out of range");
    if (e.front() == e.back()) throw InvalidArgument("edge with a single distinct node");
    if (variant == Variant::set_edges && std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InvalidArgument("repeated node in a set edge");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidArgument("repeated edge");
}

bool Hypergraph::has_edge(std::vector<int> ids) const {
  std::sort(ids.begin(), ids.end());
  return std::binary_search(edges_.begin(), edges_.end(), ids);
}

std::vector<int> Hypergraph::isolated_nodes() const {
  std::vector<bool> covered(static_cast<std::size_t>(m_) + 1, false);
  for (const auto& e : edges_)
    for (int v : e) covered[static_cast<std::size_t>(v)] = true;
  std::vector<int> out;
  for (int v = 1; v <= m_; ++v)
    if (!covered[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

namespace {

// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (result > UINT64_MAX / num) return UINT64_MAX;
    result = result * num / i;
  }
  return result;
}

// Depth-first enumeration of sorted id sequences with per-element occurrence
// counts; a branch is cut as soon as some element exceeds s.
class EdgeEnumerator {
 public:
  EdgeEnumerator(const SetSystem& system, int r, int s, bool repeats)
      : system_(system), r_(r), s_(s), repeats_(repeats),
        counts_(static_cast<std::size_t>(system.ground_size()), 0) {}

  std::vector<std::vector<int>> run() {
    current_.clear();
    extend(1);
    return std::move(edges_);
  }

 private:
  void extend(int first) {
    if (static_cast<int>(current_.size()) == r_) {
      if (current_.front() != current_.back()) edges_.push_back(current_);
      return;
    }
    const int m = system_.size();
    const int remaining = r_ - static_cast<int>(current_.size());
    const int last = repeats_ ? m : m - remaining + 1;
    for (int v = first; v <= last; ++v) {
      const Mask set = system_[v - 1];
      if (!add(set)) {
        remove(set);
        continue;
      }
      current_.push_back(v);
      extend(repeats_ ? v : v + 1);
      current_.pop_back();
      remove(set);
    }
  }

  bool add(Mask set) {
    bool ok = true;
    for (int e : elements_of(set))
      if (++counts_[static_cast<std::size_t>(e - 1)] > s_) ok = false;
    return ok;
  }
  void remove(Mask set) {
    for (int e : elements_of(set)) --counts_[static_cast<std::size_t>(e - 1)];
  }

  const SetSystem& system_;
  int r_;
  int s_;
  bool repeats_;
  std::vector<int> counts_;
  std::vector<int> current_;
  std::vector<std::vector<int>> edges_;
};

void check_parameters(int r, int s) {
  if (s < 1 || s >= r) throw InvalidArgument("parameters must satisfy 1 <= s < r");
}

}  // namespace

Hypergraph build_kg(const SetSystem& system, int r, int s, std::uint64_t candidate_cap) {
  check_parameters(r, s);
  const int m = system.size();
  if (r > m) throw InvalidArgument("set-edge Kneser hypergraph needs r <= m");
  if (binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(r)) > candidate_cap)
    throw ResourceLimit("candidate edge count exceeds cap");
  auto edges = EdgeEnumerator(system, r, s, false).run();
  return Hypergraph(m, r, Variant::set_edges, std::move(edges), Hypergraph::Origin{system, s});
}

Hypergraph build_KG(const SetSystem& system, int r, int s, std::uint64_t candidate_cap) {
  check_parameters(r, s);
  const int m = system.size();
  if (binomial(static_cast<std::uint64_t>(m + r - 1), static_cast<std::uint64_t>(r)) > candidate_cap)
    throw ResourceLimit("candidate edge count exceeds cap");
  auto edges = EdgeEnumerator(system, r, s, true).run();
  return Hypergraph(m, r, Variant::multiset_edges, std::move(edges), Hypergraph::Origin{system, s});
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << "nodes " << h.node_count() << '\n'
      << "r " << h.uniformity() << '\n'
      << "variant " << variant_name(h.variant()) << '\n';
  for (const auto& e : h.edges()) {
    out << "edge";
    for (int v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int m = -1;
  int r = -1;
  std::optional<Variant> variant;
  std::vector<std::vector<int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    if (key == "nodes" || key == "r") {
      int value = 0;
      if (!(words >> value) || value < 0) throw ParseError(line_no, "expected '" + key + " <int>'");
      (key == "nodes" ? m : r) = value;
    } else if (key == "variant") {
      std::string v;
      words >> v;
      if (v == "set") variant = Variant::set_edges;
      else if (v == "multiset") variant = Variant::multiset_edges;
      else throw ParseError(line_no, "variant must be 'set' or 'multiset'");
    } else if (key == "edge") {
      if (m < 0 || r < 0 || !variant) throw ParseError(line_no, "edge before header");
      std::vector<int> e;
      int v = 0;
      while (words >> v) e.push_back(v);
      if (!words.eof()) throw ParseError(line_no, "malformed edge");
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
    std::string rest;
    if (key != "edge" && (words >> rest)) throw ParseError(line_no, "trailing text");
  }
  if (m < 0 || r < 0 || !variant) throw ParseError(line_no, "incomplete header");
  try {
    return Hypergraph(m, r, *variant, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace kneserlab
