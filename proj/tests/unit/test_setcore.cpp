#include <doctest.h>

#include <vector>

#include "kneserlab/error.hpp"
#include "kneserlab/setcore.hpp"
#include "oracles.hpp"

using namespace kneserlab;

namespace {
Mask m(std::vector<int> e) { return mask_of(e); }
}  // namespace

TEST_CASE("parse_instance reads a transcribed family") {
  const auto t = parse_instance("n 5\nset 1 2\nset 2 3\n");
  CHECK(t.ground_size() == 5);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == m({1, 2}));
  CHECK(t[1] == m({2, 3}));
}

TEST_CASE("parse_instance skips comments and blank lines") {
  const auto t = parse_instance("# pairs\n\nn 3   # ground\nset 1 3\n  set 2\n");
  CHECK(t.size() == 2);
  CHECK(t[1] == m({2}));
}

TEST_CASE("parse_instance rejects malformed input with a line number") {
  CHECK_THROWS_AS(parse_instance("n 3\nset 1\nset 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("n 3\nset 4\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("n 3\nset\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("n 3\nset 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("set 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("n 3\nfoo 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("n 0\n"), ParseError);
  try {
    parse_instance("n 3\nset 1\nset 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("example 1 family has the stated node order") {
  const auto t = worked_family(WorkedFamily::example1);
  REQUIRE(t.size() == 6);
  CHECK(t.ground_size() == 5);
  CHECK(t[4] == m({2, 3}));
  CHECK(t[5] == m({4, 5}));
  CHECK(parse_instance(serialize(t)) == t);
}

TEST_CASE("counterexample family") {
  const auto t = worked_family(WorkedFamily::counterexample1, 8);
  REQUIRE(t.size() == 9);
  for (int x = 2; x <= 8; ++x) CHECK(t[x - 2] == m({1, x}));
  CHECK(t[7] == m({2, 3}));
  CHECK(t[8] == m({4, 5}));
  CHECK_THROWS_AS(worked_family(WorkedFamily::counterexample1, 4), InvalidArgument);
}

TEST_CASE("s-disjointness") {
  CHECK(is_s_disjoint(std::vector{m({2, 4}), m({2, 5}), m({3, 4})}, 2));
  CHECK_FALSE(is_s_disjoint(std::vector{m({2, 4}), m({2, 5}), m({3, 4})}, 1));
  CHECK_FALSE(is_s_disjoint(std::vector{m({1}), m({1})}, 1));
  CHECK(is_s_disjoint(std::vector<Mask>{0, 0, 0}, 1));
}

TEST_CASE("canonical multisets") {
  CHECK(canonical_multiset({6, 5, 5}).entries == std::vector{5, 5, 6});
  CHECK(canonical_multiset({3, 1, 2}).entries == std::vector{1, 2, 3});
  CHECK(canonical_multiset({6, 5, 5}).support() == std::vector{5, 6});
  CHECK_THROWS_AS(canonical_multiset({1, 1, 1}), InvalidArgument);
}

TEST_CASE("complete k-subsets") {
  const auto t = complete_k_subsets(5, 2);
  REQUIRE(t.size() == 10);
  CHECK(t[0] == m({1, 2}));
  CHECK(t[9] == m({4, 5}));
  CHECK(complete_k_subsets(3, 3).size() == 1);
  CHECK(complete_k_subsets(6, 2).size() == 15);
  for (int i = 1; i < t.size(); ++i) CHECK(elements_of(t[i - 1]) < elements_of(t[i]));
}

TEST_CASE("relabel") {
  const auto t = worked_family(WorkedFamily::example1);
  const std::vector<int> identity{1, 2, 3, 4, 5};
  CHECK(relabel(t, identity) == t);
  const auto swapped = relabel(t, std::vector{2, 1, 3, 4, 5});
  const std::vector<Mask> expected{m({1, 2}), m({2, 3}), m({2, 4}), m({2, 5}), m({1, 3}), m({4, 5})};
  CHECK(std::vector<Mask>(swapped.sets().begin(), swapped.sets().end()) == expected);
  const SetSystem pair(5, {m({4, 5})});
  CHECK(relabel(pair, std::vector{1, 2, 3, 5, 4})[0] == m({4, 5}));
  CHECK_THROWS_AS(relabel(t, std::vector{1, 1, 3, 4, 5}), InvalidArgument);
}

TEST_CASE("SetSystem validation") {
  CHECK_THROWS_AS(SetSystem(3, {0}), InvalidArgument);
  CHECK_THROWS_AS(SetSystem(3, {m({4})}), InvalidArgument);
  CHECK_THROWS_AS(SetSystem(3, {m({1}), m({1})}), InvalidArgument);
  CHECK(format_set(m({1, 3})) == "{1,3}");
  CHECK(format_set(0) == "{}");
}

TEST_CASE("instance round trip is byte-identical on random families") {
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.between(1, 8);
    const auto t = oracle::random_system(rng, n, rng.between(1, 10));
    const auto text = serialize(t);
    const auto back = parse_instance(text);
    CHECK(back == t);
    CHECK(serialize(back) == text);
  }
}
