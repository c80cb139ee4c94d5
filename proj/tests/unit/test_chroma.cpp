#include <doctest.h>

#include "kneserlab/chroma.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/kneser.hpp"
#include "oracles.hpp"

using namespace kneserlab;

namespace {
// nodes containing 1 get colour 1, the others colour 2
const Colouring kTwoColouring = Colouring::from({1, 1, 1, 1, 2, 2});
}  // namespace

TEST_CASE("the two-colouring of example 1 is proper on kg only") {
  const auto t = worked_family(WorkedFamily::example1);
  CHECK(is_proper(build_kg(t, 3, 2), kTwoColouring));
  CHECK_FALSE(is_proper(build_KG(t, 3, 2), kTwoColouring));
}

TEST_CASE("edgeless hypergraphs accept constant colourings") {
  const Hypergraph h(3, 2, Variant::set_edges, {});
  CHECK(is_proper(h, Colouring::from({1, 1, 1})));
  CHECK(chromatic_number(h).chi == 1);
  CHECK_THROWS_AS(is_proper(h, Colouring::from({1, 1})), InvalidArgument);
}

TEST_CASE("k-colourability on example 1") {
  const auto t = worked_family(WorkedFamily::example1);
  const auto two = k_colourable(build_kg(t, 3, 2), 2);
  REQUIRE(two);
  CHECK(*two == kTwoColouring);
  CHECK_FALSE(k_colourable(build_KG(t, 3, 2), 2));
  CHECK_FALSE(k_colourable(build_KG(t, 3, 2), 1));
}

TEST_CASE("chromatic numbers of the worked instances") {
  const auto t = worked_family(WorkedFamily::example1);
  CHECK(chromatic_number(build_kg(t, 3, 2)).chi == 2);
  const auto big = chromatic_number(build_KG(t, 3, 2));
  CHECK(big.chi == 3);
  CHECK(big.lower_exhausted);
  CHECK(is_proper(build_KG(t, 3, 2), big.witness));
  const auto petersen = build_kg(complete_k_subsets(5, 2), 2, 1);
  CHECK(chromatic_number(petersen).chi == 3);
  CHECK(oracle::chromatic(10, petersen.edges()) == 3);
}

TEST_CASE("greedy pair colouring") {
  const auto c = greedy_pair_colouring(6);
  CHECK(c.colours == std::vector{1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4});
  CHECK(c.k == 4);
  CHECK(greedy_pair_colouring(5).k == 3);
  CHECK(is_proper(build_kg(complete_k_subsets(6, 2), 4, 3), c));
  CHECK(is_proper(build_kg(complete_k_subsets(5, 2), 2, 1), greedy_pair_colouring(5)));
  CHECK_THROWS_AS(greedy_pair_colouring(3), InvalidArgument);
}

TEST_CASE("exact chromatic number matches exhaustive colouring for m <= 6") {
  oracle::Rng rng(41);
  int checked = 0;
  for (int i = 0; i < 250; ++i) {
    const int n = rng.between(2, 5);
    const auto t = oracle::random_system(rng, n, rng.between(2, 6));
    const int r = rng.between(2, 3);
    const int s = rng.between(1, r - 1);
    for (bool multiset : {false, true}) {
      if (!multiset && r > t.size()) continue;
      const auto h = multiset ? build_KG(t, r, s) : build_kg(t, r, s);
      const auto res = chromatic_number(h);
      CHECK(res.chi == oracle::chromatic(h.node_count(), h.edges()));
      CHECK(is_proper(h, res.witness));
      CHECK(res.witness.k == res.chi);
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("returned colouring is the lexicographically least optimal one") {
  oracle::Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    const auto t = oracle::random_system(rng, rng.between(2, 4), rng.between(3, 6));
    const auto h = build_KG(t, 2 + rng.below(2), 1);
    const auto res = chromatic_number(h);
    const int mnodes = h.node_count();
    std::vector<int> c(static_cast<std::size_t>(mnodes), 1);
    std::vector<int> first;
    while (true) {
      if (oracle::proper(h.edges(), c)) {
        first = c;
        break;
      }
      int j = mnodes - 1;
      while (j >= 0 && c[static_cast<std::size_t>(j)] == res.chi) c[static_cast<std::size_t>(j--)] = 1;
      if (j < 0) break;
      ++c[static_cast<std::size_t>(j)];
    }
    CHECK(res.witness.colours == first);
  }
}

TEST_CASE("chi(kg) <= chi(KG) on random instances") {
  oracle::Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    const auto t = oracle::random_system(rng, rng.between(2, 6), rng.between(3, 7));
    const int r = rng.between(2, 3);
    const int s = rng.between(1, r - 1);
    CHECK(chromatic_number(build_kg(t, r, s)).chi <= chromatic_number(build_KG(t, r, s)).chi);
  }
}

TEST_CASE("colouring search respects its budget") {
  const auto h = build_kg(complete_k_subsets(7, 2), 2, 1);
  CHECK_THROWS_AS(chromatic_number(h, 5), ResourceLimit);
}

TEST_CASE("colouring output format") {
  CHECK(format_colouring(Colouring::from({2, 1})) == "colour 1 2\ncolour 2 1\n");
}
