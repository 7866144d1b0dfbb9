#include <set>

#include "bpn/signed_permutation.hpp"
#include "doctest.h"
#include "support.hpp"

using bpn::SignedPermutation;

namespace {
SignedPermutation P(std::vector<int> v) { return SignedPermutation(v); }
}  // namespace

TEST_SUITE("permutation") {
  TEST_CASE("construction rejects malformed sequences") {
    CHECK_THROWS_AS(P({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(P({}), std::invalid_argument);
  }

  TEST_CASE("prefix reversal examples") {
    CHECK(bpn::prefix_reversal(P({1, 2, 3}), 2) == P({-2, -1, 3}));
    CHECK_THROWS_AS(bpn::prefix_reversal(P({1, 2, 3}), 0), std::invalid_argument);
    CHECK_THROWS_AS(bpn::prefix_reversal(P({1, 2, 3}), 4), std::invalid_argument);
    for (int n = 2; n <= 6; ++n)
      for (int l = 1; l <= n; ++l) {
        std::vector<int> expect;
        for (int k = l; k >= 1; --k) expect.push_back(-k);
        for (int k = l + 1; k <= n; ++k) expect.push_back(k);
        CHECK(bpn::prefix_reversal(SignedPermutation::identity(n), l) == P(expect));
      }
  }

  TEST_CASE("prefix reversal matches the reference formula") {
    for (const auto& p : ref::all_perms(4))
      for (int i = 1; i <= 4; ++i) CHECK(bpn::prefix_reversal(P(p), i).symbols() == ref::flip(p, i));
  }

  TEST_CASE("out-neighbour examples") {
    const auto o = bpn::out_neighbour(P({1, 2, 3}));
    CHECK(o == P({-3, -2, -1}));
    CHECK(bpn::cluster_of(o) == -1);
    const auto o2 = bpn::out_neighbour(P({2, -1, 3}));
    CHECK(o2.symbols() == ref::flip({2, -1, 3}, 3));
    CHECK(o2 == P({-3, 1, -2}));
    CHECK(bpn::cluster_of(o2) == -2);
    for (const auto& p : ref::all_perms(3)) {
      const auto x = P(p);
      CHECK(bpn::out_neighbour(bpn::out_neighbour(x)) == x);
      CHECK(bpn::cluster_of(bpn::out_neighbour(x)) == -p.front());
    }
  }

  TEST_CASE("cluster_of") {
    CHECK(bpn::cluster_of(P({1, 2, 3})) == 3);
    CHECK(bpn::cluster_of(P({-3, -2, -1})) == -1);
    for (const auto& p : ref::all_perms(4))
      for (int i = 1; i < 4; ++i) CHECK(bpn::cluster_of(bpn::prefix_reversal(P(p), i)) == bpn::cluster_of(P(p)));
  }

  TEST_CASE("gamma neighbour") {
    for (int n = 3; n <= 6; ++n) {
      const auto id = SignedPermutation::identity(n);
      for (int i = 1; i < n; ++i) {
        const auto gx = bpn::gamma_neighbour(id, i);
        CHECK(gx == bpn::prefix_reversal(id, i));
        CHECK(bpn::cluster_of(bpn::out_neighbour(gx)) == i);
      }
    }
    // x = 2 1 3: classify the out-clusters of all in-cluster neighbours by hand-rolled flips.
    const std::vector<int> x{2, 1, 3};
    std::vector<int> hits;
    for (int j = 1; j < 3; ++j) {
      const auto nb = ref::flip(x, j);
      const int c = ref::flip(nb, 3).back();
      if (c == 2 || c == -2) hits.push_back(j);
    }
    REQUIRE(hits == std::vector<int>{1});
    const auto gx = bpn::gamma_neighbour(P(x), 2);
    CHECK(gx == P({-2, 1, 3}));
    CHECK(bpn::out_neighbour(gx) == P({-3, -1, 2}));
    CHECK_THROWS_AS(bpn::gamma_neighbour(P(x), 3), std::invalid_argument);
    CHECK_THROWS_AS(bpn::gamma_neighbour(P(x), 0), std::invalid_argument);
    CHECK_THROWS_AS(bpn::gamma_neighbour(P(x), 4), std::invalid_argument);
  }

  TEST_CASE("two-step path") {
    const auto id = SignedPermutation::identity(3);
    const auto path = bpn::two_step_path(id, 1);
    REQUIRE(path.size() == 3);
    CHECK(path[0] == id);
    CHECK(path[1] == P({-1, 2, 3}));
    CHECK(path[2] == bpn::out_neighbour(P({-1, 2, 3})));
    CHECK(bpn::cluster_of(path[2]) == 1);
    for (const auto& p : ref::all_perms(4)) {
      for (int i = 1; i <= 4; ++i) {
        if (i == std::abs(p.back())) continue;
        const auto q = bpn::two_step_path(P(p), i);
        REQUIRE(q.size() == 3);
        CHECK(ref::adjacent(q[0].symbols(), q[1].symbols()));
        CHECK(ref::adjacent(q[1].symbols(), q[2].symbols()));
        CHECK(bpn::cluster_of(q[1]) == p.back());
        CHECK(std::abs(bpn::cluster_of(q[2])) == i);
      }
    }
  }

  TEST_CASE("left multiplication") {
    const auto x = P({2, -1, 3});
    CHECK(bpn::left_multiply(SignedPermutation::identity(3), x) == x);
    CHECK(bpn::left_multiply(x.inverse(), x).is_identity());
    CHECK_THROWS_AS(bpn::left_multiply(SignedPermutation::identity(2), x), std::invalid_argument);
    for (const auto& p : ref::all_perms(3)) {
      const auto y = P(p);
      CHECK(bpn::left_multiply(y.inverse(), y).is_identity());
    }
  }

  TEST_CASE("text form") {
    CHECK(bpn::to_string(P({-2, -1, 3})) == "-2,-1,3");
    CHECK(bpn::parse_vertex("-2,-1,3") == P({-2, -1, 3}));
    CHECK(bpn::parse_vertex(" 1, +2 ,3") == P({1, 2, 3}));
    CHECK_THROWS_AS(bpn::parse_vertex(""), std::invalid_argument);
    CHECK_THROWS_AS(bpn::parse_vertex("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(bpn::parse_vertex("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(bpn::parse_vertex("1,1"), std::invalid_argument);
    for (const auto& p : ref::all_perms(4)) CHECK(bpn::parse_vertex(bpn::to_string(P(p))) == P(p));
  }

  TEST_CASE("rank order is the canonical order") {
    for (int n = 2; n <= 4; ++n) {
      auto perms = ref::all_perms(n);
      // Negative before positive of the same magnitude, then lexicographic.
      std::sort(perms.begin(), perms.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](int s, int t) {
          const int ks = 2 * std::abs(s) + (s > 0);
          const int kt = 2 * std::abs(t) + (t > 0);
          return ks < kt;
        });
      });
      REQUIRE(perms.size() == bpn::vertex_count(n));
      for (std::size_t r = 0; r < perms.size(); ++r) {
        CHECK(bpn::rank(P(perms[r])) == r);
        CHECK(bpn::unrank(n, r) == P(perms[r]));
      }
    }
    CHECK(bpn::vertex_count(5) == 3840);
  }

  TEST_CASE("neighbours are distinct") {
    for (const auto& p : ref::all_perms(4)) {
      std::set<std::vector<int>> seen{p};
      for (int i = 1; i <= 4; ++i) seen.insert(bpn::prefix_reversal(P(p), i).symbols());
      CHECK(seen.size() == 5);
    }
  }
}
