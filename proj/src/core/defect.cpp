#include "kneserlab/defect.hpp"

#include <algorithm>
#include <sstream>

#include "kneserlab/error.hpp"

namespace kneserlab {

bool is_template_free(Mask part, const SetSystem& system) {
  for (Mask t : system.sets())
    if (is_subset(t, part)) return false;
  return true;
}

namespace {

void check_parameters(int r, int s) {
  if (s < 1 || s >= r) throw InvalidArgument("parameters must satisfy 1 <= s < r");
}

// Elements are decided one at a time. Parts with equal masks have identical
// incidence histories, so within each run of equal parts only a prefix may
// receive the current element; this keeps the parts lexicographically
// non-increasing and removes the r! part symmetry.
class DefectSearch {
 public:
  DefectSearch(const SetSystem& system, int r, int s, std::uint64_t budget)
      : system_(system), n_(system.ground_size()), r_(r), s_(s), budget_(budget),
        parts_(static_cast<std::size_t>(r), 0), through_(static_cast<std::size_t>(n_)) {
    for (Mask t : system.sets())
      for (int e : elements_of(t)) through_[static_cast<std::size_t>(e - 1)].push_back(t);
  }

  DefectResult run() {
    best_cover_ = -1;
    descend(0, 0);
    DefectResult result;
    result.max_cover = best_cover_;
    result.value = n_ * s_ - best_cover_;
    result.witness = SubsetTuple{best_parts_};
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Run {
    int start;
    int legal;
  };

  bool can_take(Mask part, int e) const {
    const Mask grown = part | element_bit(e + 1);
    for (Mask t : through_[static_cast<std::size_t>(e)])
      if (is_subset(t, grown)) return false;
    return true;
  }

  int optimistic_rest(int from) const {
    int bound = 0;
    for (int e = from; e < n_; ++e) {
      int open = 0;
      for (Mask p : parts_) open += can_take(p, e);
      bound += std::min(open, s_);
    }
    return bound;
  }

  void descend(int e, int cover) {
    if (++nodes_ > budget_) throw ResourceLimit("defect search exceeded node budget");
    if (e == n_) {
      if (cover > best_cover_) {
        best_cover_ = cover;
        best_parts_ = parts_;
      }
      return;
    }
    if (cover + optimistic_rest(e) <= best_cover_) return;

    // Runs of equal parts: [start, end) with a shared legality flag.
    std::vector<Run> runs;
    for (int j = 0; j < r_;) {
      int k = j + 1;
      while (k < r_ && parts_[static_cast<std::size_t>(k)] == parts_[static_cast<std::size_t>(j)]) ++k;
      const int legal = can_take(parts_[static_cast<std::size_t>(j)], e) ? k - j : 0;
      runs.push_back({j, legal});
      j = k;
    }
    std::vector<int> take(runs.size(), 0);
    choose(runs, take, 0, s_, e, cover);
  }

  void choose(const std::vector<Run>& runs, std::vector<int>& take, std::size_t i, int left, int e,
              int cover) {
    if (i == runs.size()) {
      int added = 0;
      for (std::size_t q = 0; q < runs.size(); ++q)
        for (int t = 0; t < take[q]; ++t) {
          parts_[static_cast<std::size_t>(runs[q].start + t)] |= element_bit(e + 1);
          ++added;
        }
      descend(e + 1, cover + added);
      for (std::size_t q = 0; q < runs.size(); ++q)
        for (int t = 0; t < take[q]; ++t)
          parts_[static_cast<std::size_t>(runs[q].start + t)] &= ~element_bit(e + 1);
      return;
    }
    for (int k = std::min(runs[i].legal, left); k >= 0; --k) {
      take[i] = k;
      choose(runs, take, i + 1, left - k, e, cover);
    }
    take[i] = 0;
  }

  const SetSystem& system_;
  int n_;
  int r_;
  int s_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> parts_;
  std::vector<std::vector<Mask>> through_;
  int best_cover_ = -1;
  std::vector<Mask> best_parts_;
};

}  // namespace

DefectResult colourability_defect(const SetSystem& system, int r, int s, std::uint64_t node_budget) {
  check_parameters(r, s);
  return DefectSearch(system, r, s, node_budget).run();
}

int defect_oracle(const SetSystem& system, int r, int s) {
  check_parameters(r, s);
  const int n = system.ground_size();
  if (n * r > kOracleMaxIncidences) throw ResourceLimit("defect oracle needs n*r <= 20");
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<bool> free(subsets);
  for (std::uint64_t R = 0; R < subsets; ++R) free[R] = is_template_free(R, system);

  const Mask low = subsets - 1;
  int best = 0;
  std::vector<Mask> parts(static_cast<std::size_t>(r));
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << (n * r)); ++pattern) {
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      parts[static_cast<std::size_t>(j)] = (pattern >> (j * n)) & low;
      ok = free[parts[static_cast<std::size_t>(j)]];
    }
    if (!ok || !is_s_disjoint(parts, s)) continue;
    best = std::max(best, std::popcount(pattern));
  }
  return n * s - best;
}

std::string format_witness(const SubsetTuple& witness) {
  std::ostringstream out;
  for (std::size_t j = 0; j < witness.parts.size(); ++j) {
    out << "part " << j + 1 << ':';
    for (int e : elements_of(witness.parts[j])) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

std::string compact_witness(const SubsetTuple& t) {
  if (t.parts.empty()) return "-";
  std::string out;
  for (std::size_t j = 0; j < t.parts.size(); ++j) {
    if (j > 0) out += '|';
    bool first = true;
    for (int e : elements_of(t.parts[j])) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
  }
  return out;
}

}  // namespace kneserlab
