#include "bpn/builder.hpp"
#include "bpn/oracle.hpp"
#include "bpn/verifier.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bpn;

namespace {

std::vector<VertexId> ids(const BurntPancakeGraph& g, const std::vector<ref::Perm>& perms) {
  std::vector<VertexId> out;
  for (const auto& p : perms) out.push_back(ref::vid(g, p));
  return out;
}

bool has_terminal_edge(const BurntPancakeGraph& g, const std::vector<VertexId>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (ref::adjacent(g.vertex(s[a]).symbols(), g.vertex(s[b]).symbols())) return true;
  return false;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("upper bound") {
    CHECK(upper_bound_kappa4(BurntPancakeGraph(2)) == 1);
    CHECK(upper_bound_kappa4(BurntPancakeGraph(3)) == 2);
    CHECK(upper_bound_kappa4(BurntPancakeGraph(4)) == 3);
  }

  TEST_CASE("the 8-cycle admits one tree for every S") {
    const BurntPancakeGraph g(2);
    for (const auto& s : all_four_subsets(g)) {
      const auto r = max_idsts_bruteforce(g, s, 2);
      CHECK(r.exhausted);
      CHECK(r.max_idsts_found == 1);
      CHECK(ref::family_ok(g, s, r.certificate, 1));
    }
    const auto sum = kappa4_exact_small(g, all_four_subsets(g));
    CHECK(sum.subsets == 70);
    CHECK(sum.min_found == 1);
    CHECK(sum.all_exhausted);
    CHECK(sum.matches_bound);
    CHECK_FALSE(sum.counterexample.has_value());
  }

  TEST_CASE("two trees for random S in BP3") {
    const BurntPancakeGraph g(3);
    std::mt19937_64 rng(55);
    for (int k = 0; k < 100; ++k) {
      const auto s = ref::random_set(g, 4, rng);
      const auto r = max_idsts_bruteforce(g, s, 2);
      CHECK(r.exhausted);
      CHECK(r.max_idsts_found == 2);
      CHECK(ref::family_ok(g, s, r.certificate, 2));
      CHECK(verify_family(g, s, r.certificate, 2).ok);
      const auto built = build_idsts(g, s);
      CHECK(static_cast<int>(built.trees.size()) <= r.max_idsts_found);
    }
  }

  TEST_CASE("a terminal set with three trees in BP3") {
    const BurntPancakeGraph g(3);
    const auto s = ids(g, {{1, 2, 3}, {-2, 3, 1}, {2, 1, 3}, {2, -3, -1}});
    CHECK_FALSE(has_terminal_edge(g, s));
    const auto r = max_idsts_bruteforce(g, s, 3);
    CHECK(r.exhausted);
    REQUIRE(r.max_idsts_found == 3);
    CHECK(ref::family_ok(g, s, r.certificate, 3));
    // More than three is impossible: every terminal has degree three.
    const auto four = max_idsts_bruteforce(g, s, 4);
    CHECK(four.exhausted);
    CHECK(four.max_idsts_found == 3);
  }

  TEST_CASE("adjacent terminals cap BP3 at two") {
    const BurntPancakeGraph g(3);
    std::mt19937_64 rng(9);
    int seen = 0;
    while (seen < 15) {
      const auto s = ref::random_set(g, 4, rng);
      if (!has_terminal_edge(g, s)) continue;
      ++seen;
      const auto r = max_idsts_bruteforce(g, s, 3);
      CHECK(r.exhausted);
      CHECK(r.max_idsts_found == 2);
      CHECK(ref::family_ok(g, s, r.certificate, 2));
    }
  }

  TEST_CASE("minimum over a BP3 sample") {
    const BurntPancakeGraph g(3);
    std::mt19937_64 rng(123);
    std::vector<std::vector<VertexId>> sample;
    for (int k = 0; k < 60; ++k) sample.push_back(ref::random_set(g, 4, rng));
    const auto sum = kappa4_exact_small(g, sample, 5'000'000);
    CHECK(sum.subsets == sample.size());
    CHECK(sum.min_found == 2);
    CHECK(sum.matches_bound);
    CHECK_FALSE(sum.counterexample.has_value());
  }

  TEST_CASE("empty sample") {
    const auto sum = kappa4_exact_small(BurntPancakeGraph(3), {});
    CHECK(sum.subsets == 0);
    CHECK(sum.min_found == -1);
    CHECK_FALSE(sum.matches_bound);
  }

  TEST_CASE("zero budget keeps the greedy seed") {
    const BurntPancakeGraph g(3);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; ++k) {
      const auto s = ref::random_set(g, 4, rng);
      const auto r = max_idsts_bruteforce(g, s, 2, 0);
      CHECK_FALSE(r.exhausted);
      CHECK(r.max_idsts_found >= 1);
      CHECK(ref::family_ok(g, s, r.certificate, static_cast<std::size_t>(r.max_idsts_found)));
    }
  }

  TEST_CASE("three terminals and bad input") {
    const BurntPancakeGraph g(3);
    const auto r = max_idsts_bruteforce(g, {0, 17, 40}, 2);
    CHECK(r.max_idsts_found == 2);
    CHECK(ref::family_ok(g, {0, 17, 40}, r.certificate, 2));
    CHECK_THROWS_AS(max_idsts_bruteforce(g, {0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(max_idsts_bruteforce(g, {0, 0, 1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(max_idsts_bruteforce(g, {0, 1, 2, 99}, 2), std::invalid_argument);
    CHECK_THROWS_AS(max_idsts_bruteforce(g, {0, 1, 2, 3}, -1), std::invalid_argument);
  }

  TEST_CASE("a small target at n = 4") {
    const BurntPancakeGraph g(4);
    std::mt19937_64 rng(6);
    for (int k = 0; k < 5; ++k) {
      const auto s = ref::random_set(g, 4, rng);
      const auto r = max_idsts_bruteforce(g, s, 2);
      CHECK(r.max_idsts_found == 2);
      CHECK(ref::family_ok(g, s, r.certificate, 2));
    }
  }
}
