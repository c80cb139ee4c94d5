#include "kneserlab/homology.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "kneserlab/error.hpp"

namespace kneserlab {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// target <- target - factor * source, both sorted by row.
void axpy(SparseColumn& target, const SparseColumn& source, std::uint32_t factor, std::uint32_t p,
          SparseColumn& scratch) {
  scratch.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      scratch.push_back(target[i++]);
    } else {
      const std::uint64_t sub = static_cast<std::uint64_t>(factor) * source[j].second % p;
      if (i < target.size() && target[i].first == source[j].first) {
        const std::uint32_t v = static_cast<std::uint32_t>((target[i].second + p - sub) % p);
        if (v != 0) scratch.emplace_back(target[i].first, v);
        ++i;
      } else {
        scratch.emplace_back(source[j].first, static_cast<std::uint32_t>((p - sub) % p));
      }
      ++j;
    }
  }
  target.swap(scratch);
}

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& k, int p, const ComplexGuard& guard) {
  if (!is_prime(p)) throw InvalidArgument("coefficient characteristic must be prime");
  std::size_t nonzeros = 0;
  for (int d = 0; d <= k.dim(); ++d) nonzeros += k.face_count(d) * static_cast<std::size_t>(d + 1);
  if (nonzeros > guard.max_nonzeros) throw ResourceLimit("boundary matrices exceed nonzero guard");

  const auto up = static_cast<std::uint32_t>(p);
  ChainComplex c;
  c.p = p;
  for (int d = 0; d <= k.dim(); ++d) {
    BoundaryMatrix m;
    m.rows = d == 0 ? 1 : static_cast<int>(k.face_count(d - 1));
    m.columns.resize(k.face_count(d));
    std::vector<int> sub;
    for (std::size_t i = 0; i < k.face_count(d); ++i) {
      auto& col = m.columns[i];
      if (d == 0) {
        col.emplace_back(0, 1);
        continue;
      }
      auto f = k.face(d, i);
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto row = static_cast<int>(*k.index_of(sub));
        col.emplace_back(row, drop % 2 == 0 ? 1u : up - 1);
      }
      std::sort(col.begin(), col.end());
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  const auto p = static_cast<std::uint32_t>(c.p);
  std::unordered_map<int, std::uint64_t> acc;
  for (std::size_t d = 1; d < c.boundaries.size(); ++d) {
    const auto& lower = c.boundaries[d - 1];
    for (const auto& col : c.boundaries[d].columns) {
      acc.clear();
      for (auto [row, coef] : col)
        for (auto [row2, coef2] : lower.columns[static_cast<std::size_t>(row)])
          acc[row2] = (acc[row2] + static_cast<std::uint64_t>(coef) * coef2) % p;
      for (const auto& [row2, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

// Column reduction from the top dimension down. A row that becomes the
// pivot of a reduced column in dimension d+1 indexes a column of dimension d
// that reduces to zero, so it is skipped (clearing).
std::vector<std::int64_t> boundary_ranks(const ChainComplex& c) {
  const auto p = static_cast<std::uint32_t>(c.p);
  std::vector<std::int64_t> ranks(c.boundaries.size(), 0);
  std::vector<bool> cleared;
  SparseColumn scratch;
  for (std::size_t di = c.boundaries.size(); di-- > 0;) {
    const auto& m = c.boundaries[di];
    std::vector<SparseColumn> reduced;
    reduced.reserve(m.columns.size());
    std::vector<int> pivot_of(static_cast<std::size_t>(m.rows), -1);
    std::vector<bool> next_cleared(static_cast<std::size_t>(m.rows), false);
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
      if (!cleared.empty() && cleared[j]) continue;
      SparseColumn col = m.columns[j];
      while (!col.empty()) {
        const int low = col.back().first;
        const int owner = pivot_of[static_cast<std::size_t>(low)];
        if (owner < 0) break;
        const auto& other = reduced[static_cast<std::size_t>(owner)];
        const std::uint64_t factor =
            static_cast<std::uint64_t>(col.back().second) * inverse_mod(other.back().second, p) % p;
        axpy(col, other, static_cast<std::uint32_t>(factor), p, scratch);
      }
      if (col.empty()) continue;
      pivot_of[static_cast<std::size_t>(col.back().first)] = static_cast<int>(reduced.size());
      next_cleared[static_cast<std::size_t>(col.back().first)] = true;
      reduced.push_back(std::move(col));
    }
    ranks[di] = static_cast<std::int64_t>(reduced.size());
    cleared = std::move(next_cleared);
  }
  return ranks;
}

BettiTable betti_from_ranks(const SimplicialComplex& k, int p, const std::vector<std::int64_t>& ranks) {
  BettiTable b;
  b.p = p;
  const int top = k.dim();
  b.reduced.assign(static_cast<std::size_t>(top + 2), 0);
  auto rank = [&](int d) -> std::int64_t {
    return d >= 0 && d < static_cast<int>(ranks.size()) ? ranks[static_cast<std::size_t>(d)] : 0;
  };
  // degree -1: C_{-1} has dimension 1.
  b.reduced[0] = 1 - rank(0);
  for (int d = 0; d <= top; ++d)
    b.reduced[static_cast<std::size_t>(d + 1)] =
        static_cast<std::int64_t>(k.face_count(d)) - rank(d) - rank(d + 1);

  b.connectivity = -2;
  for (int d = -1; d <= top; ++d) {
    if (b.betti(d) != 0) break;
    b.connectivity = d;
  }
  b.acyclic = b.connectivity == top && b.betti(top) == 0 && b.betti(-1) == 0;
  return b;
}

std::int64_t BettiTable::betti(int degree) const {
  if (degree < -1 || degree > top_degree()) return 0;
  return reduced[static_cast<std::size_t>(degree + 1)];
}

BettiTable homology(const SimplicialComplex& k, int p, const ComplexGuard& guard) {
  const ChainComplex c = chain_complex(k, p, guard);
  return betti_from_ranks(k, p, boundary_ranks(c));
}

bool euler_identity_holds(const SimplicialComplex& k, const BettiTable& b) {
  std::int64_t faces = 0;
  for (int d = 0; d <= k.dim(); ++d) faces += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.face_count(d));
  std::int64_t betti = 0;
  for (int d = -1; d <= b.top_degree(); ++d) betti += ((d + 2) % 2 == 0 ? 1 : -1) * b.betti(d);
  return faces == 1 + betti;
}

std::string format_betti(const BettiTable& b) {
  std::ostringstream out;
  out << "dim\tbetti\n";
  for (int d = -1; d <= b.top_degree(); ++d) out << d << '\t' << b.betti(d) << '\n';
  return out.str();
}

}  // namespace kneserlab
