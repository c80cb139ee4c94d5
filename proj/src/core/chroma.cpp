#include "kneserlab/chroma.hpp"

#include <algorithm>
#include <sstream>

#include "kneserlab/error.hpp"

namespace kneserlab {

Colouring Colouring::from(std::vector<int> colours) {
  const int k = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end());
  return Colouring{std::move(colours), k};
}

bool is_proper(const Hypergraph& h, const Colouring& c) {
  if (static_cast<int>(c.colours.size()) != h.node_count())
    throw InvalidArgument("colouring length does not match node count");
  for (const auto& e : h.edges()) {
    const int first = c.colours[static_cast<std::size_t>(e.front() - 1)];
    bool mono = true;
    for (int v : e) mono = mono && c.colours[static_cast<std::size_t>(v - 1)] == first;
    if (mono) return false;
  }
  return true;
}

namespace {

// Backtracking over nodes 1..m with colours tried in ascending order and
// restricted to at most (largest colour so far) + 1, so the first colouring
// found is the lexicographically least. Forward checking: when an edge has a
// single uncoloured support node and its coloured support is monochromatic,
// that colour is forbidden for the remaining node.
class ColourSearch {
 public:
  ColourSearch(const Hypergraph& h, int k, std::uint64_t budget)
      : m_(h.node_count()), k_(k), budget_(budget),
        colour_(static_cast<std::size_t>(m_) + 1, 0),
        forbidden_(static_cast<std::size_t>(m_ + 1) * static_cast<std::size_t>(k + 1), 0),
        incident_(static_cast<std::size_t>(m_) + 1) {
    for (const auto& e : h.edges()) {
      std::vector<int> support = e;
      support.erase(std::unique(support.begin(), support.end()), support.end());
      const int id = static_cast<int>(supports_.size());
      for (int v : support) incident_[static_cast<std::size_t>(v)].push_back(id);
      open_.push_back(static_cast<int>(support.size()));
      supports_.push_back(std::move(support));
    }
  }

  std::optional<Colouring> run() {
    if (assign_from(1, 0)) {
      std::vector<int> colours(colour_.begin() + 1, colour_.end());
      return Colouring::from(std::move(colours));
    }
    return std::nullopt;
  }

 private:
  int& forbid(int v, int c) {
    return forbidden_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_ + 1) +
                      static_cast<std::size_t>(c)];
  }

  bool assign_from(int v, int used) {
    if (v > m_) return true;
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (forbid(v, c) > 0) continue;
      if (++nodes_ > budget_) throw ResourceLimit("colouring search exceeded node budget");
      const std::size_t mark = trail_.size();
      if (place(v, c) && assign_from(v + 1, std::max(used, c))) return true;
      unplace(v, mark);
    }
    return false;
  }

  // Colours v and propagates; returns false on a monochromatic edge or an
  // emptied domain. Always leaves state undoable via unplace.
  bool place(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = c;
    bool ok = true;
    for (int id : incident_[static_cast<std::size_t>(v)]) {
      const int left = --open_[static_cast<std::size_t>(id)];
      if (!ok || left > 1) continue;
      const auto& support = supports_[static_cast<std::size_t>(id)];
      int mono = 0;
      int free_node = 0;
      for (int u : support) {
        const int cu = colour_[static_cast<std::size_t>(u)];
        if (cu == 0) {
          free_node = u;
        } else if (mono == 0) {
          mono = cu;
        } else if (mono != cu) {
          mono = -1;
        }
      }
      if (mono <= 0) continue;
      if (left == 0) {
        ok = false;
      } else {
        ++forbid(free_node, mono);
        trail_.push_back({free_node, mono});
        if (domain_empty(free_node)) ok = false;
      }
    }
    return ok;
  }

  void unplace(int v, std::size_t mark) {
    while (trail_.size() > mark) {
      --forbid(trail_.back().first, trail_.back().second);
      trail_.pop_back();
    }
    for (int id : incident_[static_cast<std::size_t>(v)]) ++open_[static_cast<std::size_t>(id)];
    colour_[static_cast<std::size_t>(v)] = 0;
  }

  bool domain_empty(int v) {
    for (int c = 1; c <= k_; ++c)
      if (forbid(v, c) == 0) return false;
    return true;
  }

  int m_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colour_;
  std::vector<int> forbidden_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> supports_;
  std::vector<int> open_;
  std::vector<std::pair<int, int>> trail_;
};

}  // namespace

std::optional<Colouring> k_colourable(const Hypergraph& h, int k, std::uint64_t node_budget) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (h.node_count() == 0) return Colouring{{}, 0};
  if (!h.edges().empty() && k == 1) return std::nullopt;
  return ColourSearch(h, k, node_budget).run();
}

ChromaticResult chromatic_number(const Hypergraph& h, std::uint64_t node_budget) {
  ChromaticResult result;
  if (h.edges().empty()) {
    result.chi = 1;
    result.witness = Colouring{std::vector<int>(static_cast<std::size_t>(h.node_count()), 1), 1};
    return result;
  }
  for (int k = 2; k <= h.node_count(); ++k) {
    if (auto c = k_colourable(h, k, node_budget)) {
      result.chi = k;
      result.witness = std::move(*c);
      result.lower_exhausted = true;
      return result;
    }
  }
  throw VerificationFailure("no proper colouring with m colours");
}

Colouring greedy_pair_colouring(int n) {
  if (n < 4) throw InvalidArgument("greedy pair colouring needs n >= 4");
  std::vector<int> colours;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) colours.push_back(a <= n - 3 ? a : n - 2);
  return Colouring{std::move(colours), n - 2};
}

std::string format_colouring(const Colouring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.colours.size(); ++v) out << "colour " << v + 1 << ' ' << c.colours[v] << '\n';
  return out.str();
}

}  // namespace kneserlab
