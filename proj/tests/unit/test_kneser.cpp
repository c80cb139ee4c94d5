#include <doctest.h>

#include <set>

#include "kneserlab/error.hpp"
#include "kneserlab/kneser.hpp"
#include "oracles.hpp"

using namespace kneserlab;

TEST_CASE("kg on example 1 has only mixed edges") {
  const auto t = worked_family(WorkedFamily::example1);
  const auto h = build_kg(t, 3, 2);
  CHECK(h.variant() == Variant::set_edges);
  REQUIRE(!h.edges().empty());
  for (const auto& e : h.edges()) {
    int with_one = 0;
    for (int v : e) with_one += v <= 4;
    // two {1,x} nodes plus one of {2,3},{4,5}, or both of those plus one {1,x}
    CHECK((with_one == 2 || with_one == 1));
    CHECK(std::set<int>(e.begin(), e.end()).size() == 3);
  }
  CHECK(h.edges() == oracle::kneser_edges(t, 3, 2, false));
}

TEST_CASE("KG on example 1 contains the forcing multiset edges") {
  const auto t = worked_family(WorkedFamily::example1);
  const auto h = build_KG(t, 3, 2);
  CHECK(h.has_edge({5, 5, 6}));
  CHECK(h.has_edge({6, 5, 6}));
  CHECK_FALSE(h.has_edge({5, 5, 5}));
  CHECK(h.edges() == oracle::kneser_edges(t, 3, 2, true));
}

TEST_CASE("counterexample at n=8 has one edge on all nine nodes") {
  const auto t = worked_family(WorkedFamily::counterexample1, 8);
  const auto h = build_kg(t, 9, 7);
  REQUIRE(h.edges().size() == 1);
  CHECK(h.edges()[0] == std::vector{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(is_s_disjoint(t.sets(), 7));
}

TEST_CASE("Petersen graph from pairs of [5]") {
  const auto h = build_kg(complete_k_subsets(5, 2), 2, 1);
  CHECK(h.edges().size() == 15);
  CHECK(h.edges() == oracle::kneser_edges(complete_k_subsets(5, 2), 2, 1, false));
}

TEST_CASE("graph case: both variants agree") {
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto t = oracle::random_system(rng, rng.between(2, 6), rng.between(2, 8));
    CHECK(build_kg(t, 2, 1).edges() == build_KG(t, 2, 1).edges());
  }
}

TEST_CASE("two disjoint sets with r=3, s=2") {
  const SetSystem t(2, {mask_of(std::vector{1}), mask_of(std::vector{2})});
  const auto h = build_KG(t, 3, 2);
  CHECK(h.edges() == std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 2}});
}

TEST_CASE("builders reject bad parameters") {
  const auto t = worked_family(WorkedFamily::example1);
  CHECK_THROWS_AS(build_kg(t, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(build_kg(t, 7, 2), InvalidArgument);
  CHECK_THROWS_AS(build_KG(t, 2, 0), InvalidArgument);
  CHECK_NOTHROW(build_KG(t, 7, 2));
  CHECK_THROWS_AS(build_KG(t, 3, 2, 5), ResourceLimit);
}

TEST_CASE("edge builders match brute-force filtering") {
  oracle::Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    const int n = rng.between(1, 5);
    const auto t = oracle::random_system(rng, n, rng.between(1, 7));
    const int r = rng.between(2, 4);
    const int s = rng.between(1, r - 1);
    CHECK(build_KG(t, r, s).edges() == oracle::kneser_edges(t, r, s, true));
    if (r <= t.size()) CHECK(build_kg(t, r, s).edges() == oracle::kneser_edges(t, r, s, false));
  }
}

TEST_CASE("every kg edge is a KG edge") {
  oracle::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto t = oracle::random_system(rng, rng.between(2, 5), rng.between(3, 7));
    const int r = rng.between(2, 3);
    const int s = rng.between(1, r - 1);
    if (r > t.size()) continue;
    const auto big = build_KG(t, r, s);
    const auto small = build_kg(t, r, s);
    for (const auto& e : small.edges()) CHECK(big.has_edge(e));
  }
}

TEST_CASE("hypergraph text round trip") {
  const auto h = build_KG(worked_family(WorkedFamily::example1), 3, 2);
  const auto text = serialize(h);
  const auto back = parse_hypergraph(text);
  CHECK(back.edges() == h.edges());
  CHECK(back.variant() == Variant::multiset_edges);
  CHECK(serialize(back) == text);
  CHECK_THROWS_AS(parse_hypergraph("nodes 3\nr 2\nvariant set\nedge 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("nodes 3\nr 2\nvariant set\nedge 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("nodes 3\nr 2\nvariant set\nedge 1 2\nedge 2 1\n"), ParseError);
}

TEST_CASE("isolated nodes are reported") {
  const SetSystem t(3, {mask_of(std::vector{1}), mask_of(std::vector{2}), mask_of(std::vector{1, 2})});
  const auto h = build_kg(t, 2, 1);
  CHECK(h.isolated_nodes() == std::vector{3});
}
