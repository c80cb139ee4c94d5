#include "kneserlab/setcore.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "kneserlab/error.hpp"
#include "kneserlab/limits.hpp"

namespace kneserlab {

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) m |= element_bit(e);
  return m;
}

std::string format_set(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

SetSystem::SetSystem(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 1 || n > kMaxGroundSize)
    throw InvalidArgument("ground set size must be in 1.." + std::to_string(kMaxGroundSize));
  std::set<Mask> seen;
  for (Mask s : sets_) {
    if (s == 0) throw InvalidArgument("empty member set");
    if (!is_subset(s, ground_mask()))
      throw InvalidArgument("member " + format_set(s) + " is not a subset of [" + std::to_string(n) + "]");
    if (!seen.insert(s).second) throw InvalidArgument("duplicate member " + format_set(s));
  }
}

int SubsetTuple::total_size() const {
  int total = 0;
  for (Mask p : parts) total += cardinality(p);
  return total;
}

bool is_s_disjoint(std::span<const Mask> parts, int s) {
  if (s >= static_cast<int>(parts.size())) return true;
  Mask all = 0;
  for (Mask p : parts) all |= p;
  while (all != 0) {
    const Mask bit = all & -all;
    int count = 0;
    for (Mask p : parts) count += (p & bit) != 0;
    if (count > s) return false;
    all &= all - 1;
  }
  return true;
}

std::vector<int> MultisetEdge::support() const {
  std::vector<int> out = entries;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultisetEdge canonical_multiset(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  if (ids.empty() || ids.front() == ids.back())
    throw InvalidArgument("an r-multiset needs at least two distinct entries");
  return MultisetEdge{std::move(ids)};
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

int parse_int(std::string_view word, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

SetSystem parse_instance(std::string_view text) {
  int n = 0;
  std::vector<Mask> sets;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    if (n == 0) {
      if (words.size() != 2 || words[0] != "n") throw ParseError(line_no, "expected 'n <int>'");
      n = parse_int(words[1], line_no);
      if (n < 1 || n > kMaxGroundSize)
        throw ParseError(line_no, "n must be in 1.." + std::to_string(kMaxGroundSize));
      continue;
    }
    if (words[0] != "set") throw ParseError(line_no, "expected 'set <elements>'");
    if (words.size() == 1) throw ParseError(line_no, "empty set");
    Mask m = 0;
    int previous = 0;
    for (std::size_t i = 1; i < words.size(); ++i) {
      const int e = parse_int(words[i], line_no);
      if (e < 1 || e > n) throw ParseError(line_no, "element " + std::to_string(e) + " out of 1.." + std::to_string(n));
      if (e <= previous) throw ParseError(line_no, "elements must be strictly ascending");
      previous = e;
      m |= element_bit(e);
    }
    if (std::find(sets.begin(), sets.end(), m) != sets.end())
      throw ParseError(line_no, "duplicate set " + format_set(m));
    sets.push_back(m);
  }
  if (n == 0) throw ParseError(line_no, "missing 'n <int>' header");
  return SetSystem(n, std::move(sets));
}

std::string serialize(const SetSystem& system) {
  std::ostringstream out;
  out << "n " << system.ground_size() << '\n';
  for (Mask s : system.sets()) {
    out << "set";
    for (int e : elements_of(s)) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

SetSystem complete_k_subsets(int n, int k) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgument("n out of range");
  if (k < 1 || k > n) throw InvalidArgument("k must satisfy 1 <= k <= n");
  std::vector<Mask> sets;
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    sets.push_back(mask_of(combo));
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return SetSystem(n, std::move(sets));
}

SetSystem worked_family(WorkedFamily family, int n) {
  if (family == WorkedFamily::example1) n = 5;
  else if (n < 5) throw InvalidArgument("counterexample1 needs n >= 5");
  std::vector<Mask> sets;
  for (int x = 2; x <= n; ++x) sets.push_back(element_bit(1) | element_bit(x));
  sets.push_back(element_bit(2) | element_bit(3));
  sets.push_back(element_bit(4) | element_bit(5));
  return SetSystem(n, std::move(sets));
}

SetSystem relabel(const SetSystem& system, std::span<const int> perm) {
  const int n = system.ground_size();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation has wrong length");
  Mask image = 0;
  for (int v : perm) {
    if (v < 1 || v > n || (image & element_bit(v))) throw InvalidArgument("not a permutation of [n]");
    image |= element_bit(v);
  }
  std::vector<Mask> sets;
  sets.reserve(system.sets().size());
  for (Mask s : system.sets()) {
    Mask t = 0;
    for (int e : elements_of(s)) t |= element_bit(perm[static_cast<std::size_t>(e - 1)]);
    sets.push_back(t);
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace kneserlab
