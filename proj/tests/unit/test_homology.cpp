#include <doctest.h>

#include "kneserlab/complex.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/homology.hpp"
#include "kneserlab/topo.hpp"
#include "oracles.hpp"

using namespace kneserlab;

namespace {
SimplicialComplex from(int v, std::vector<std::vector<int>> facets) {
  std::vector<std::string> labels;
  for (int i = 0; i < v; ++i) labels.push_back(std::to_string(i));
  return SimplicialComplex::from_facets(labels, std::move(facets));
}
}  // namespace

TEST_CASE("circle") {
  const auto k = from(3, {{0, 1}, {1, 2}, {0, 2}});
  for (int p : {2, 3, 5, 7}) {
    const auto b = homology(k, p);
    CHECK(b.betti(1) == 1);
    CHECK(b.betti(0) == 0);
    CHECK(b.betti(-1) == 0);
    CHECK(b.connectivity == 0);
    CHECK_FALSE(b.acyclic);
  }
}

TEST_CASE("solid simplex is acyclic") {
  const auto b = homology(from(3, {{0, 1, 2}}), 3);
  for (int d = -1; d <= 2; ++d) CHECK(b.betti(d) == 0);
  CHECK(b.acyclic);
}

TEST_CASE("empty complex conventions") {
  const auto b = homology(SimplicialComplex::from_facets({}, {}), 2);
  CHECK(b.betti(-1) == 1);
  CHECK(b.connectivity == -2);
  CHECK(format_betti(b) == "dim\tbetti\n-1\t1\n");
}

TEST_CASE("torsion shows up only in characteristic 2") {
  // six-vertex projective plane
  const auto rp2 = from(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  CHECK(homology(rp2, 2).betti(1) == 1);
  CHECK(homology(rp2, 2).betti(2) == 1);
  CHECK(homology(rp2, 3).betti(1) == 0);
  CHECK(homology(rp2, 3).acyclic);
}

TEST_CASE("two points") {
  const auto b = homology(from(2, {{0}, {1}}), 2);
  CHECK(b.betti(0) == 1);
  CHECK(b.connectivity == -1);
}

TEST_CASE("betti table format") {
  const auto b = homology(from(3, {{0, 1}, {1, 2}, {0, 2}}), 2);
  CHECK(format_betti(b) == "dim\tbetti\n-1\t0\n0\t0\n1\t1\n");
}

TEST_CASE("homology rejects non-primes and respects the nonzero guard") {
  const auto k = from(3, {{0, 1, 2}});
  CHECK_THROWS_AS(homology(k, 4), InvalidArgument);
  CHECK_THROWS_AS(homology(k, 1), InvalidArgument);
  ComplexGuard g;
  g.max_nonzeros = 4;
  CHECK_THROWS_AS(homology(k, 2, g), ResourceLimit);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("subdivision preserves homology") {
  const std::vector<std::vector<std::vector<int>>> cases{
      {{0, 1}, {1, 2}, {0, 2}}, {{0, 1, 2}}, {{0}, {1}, {2}}, {{0, 1, 2}, {2, 3}, {3, 4}, {4, 2}}};
  for (const auto& facets : cases) {
    int v = 0;
    for (auto& f : facets)
      for (int x : f) v = std::max(v, x + 1);
    const auto k = from(v, facets);
    const auto sd = barycentric_subdivision(k);
    for (int p : {2, 3}) CHECK(homology(k, p).reduced == homology(sd, p).reduced);
  }
  const auto cycle = from(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto sd = barycentric_subdivision(cycle);
  CHECK(sd.f_vector() == std::vector<std::size_t>{8, 8});
  CHECK(homology(sd, 2).betti(1) == 1);
  CHECK(barycentric_subdivision(from(2, {{0, 1}})).f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(barycentric_subdivision(SimplicialComplex::from_facets({}, {})).empty());
}

TEST_CASE("ranks agree with a dense oracle on random complexes") {
  oracle::Rng rng(131);
  for (int i = 0; i < 60; ++i) {
    const int v = rng.between(3, 8);
    std::vector<std::vector<int>> facets;
    for (int x = 0; x < v; ++x) facets.push_back({x});
    for (int f = rng.between(2, 8); f > 0; --f) {
      std::vector<int> face;
      for (int x = 0; x < v; ++x)
        if (rng.below(3) == 0) face.push_back(x);
      if (face.size() >= 2) facets.push_back(face);
    }
    const auto k = from(v, facets);
    for (int p : {2, 3, 5}) CHECK(homology(k, p).reduced == oracle::reduced_betti(facets, p));
  }
}
