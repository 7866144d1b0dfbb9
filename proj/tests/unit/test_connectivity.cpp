#include <queue>

#include "bpn/connectivity.hpp"
#include "bpn/properties.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bpn;

namespace {

bool connected_after_removal(const BurntPancakeGraph& g, VertexId x, VertexId y, const std::set<VertexId>& gone,
                             const std::function<bool(VertexId)>& in_view) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<VertexId> q;
  q.push(x);
  seen[x] = 1;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    if (v == y) return true;
    for (VertexId u : g.neighbours(v))
      if (!seen[u] && !gone.count(u) && in_view(u)) {
        seen[u] = 1;
        q.push(u);
      }
  }
  return false;
}

// Smallest x-y separator for a non-adjacent pair, by trying every vertex set of size < limit.
int brute_separator(const BurntPancakeGraph& g, VertexId x, VertexId y, int limit,
                    const std::function<bool(VertexId)>& in_view) {
  std::vector<VertexId> others;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != x && v != y && in_view(v)) others.push_back(v);
  if (!connected_after_removal(g, x, y, {}, in_view)) return 0;
  for (VertexId a : others)
    if (!connected_after_removal(g, x, y, {a}, in_view)) return 1;
  if (limit <= 2) return limit;
  for (std::size_t i = 0; i < others.size(); ++i)
    for (std::size_t j = i + 1; j < others.size(); ++j)
      if (!connected_after_removal(g, x, y, {others[i], others[j]}, in_view)) return 2;
  return limit;
}

int leaves(const Tree& t) {
  std::map<VertexId, int> deg;
  for (auto [a, b] : t.edges) {
    ++deg[a];
    ++deg[b];
  }
  int count = 0;
  for (auto [v, d] : deg) count += d == 1;
  return count;
}

}  // namespace

TEST_SUITE("connectivity") {
  TEST_CASE("three paths between any two vertices of a BP4 cluster") {
    const BurntPancakeGraph g(4);
    const auto h = cluster_view(g, 3);
    const auto members = g.cluster_members(3);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int rep = 0; rep < 40; ++rep) {
      const VertexId x = members[pick(rng)];
      const VertexId y = members[pick(rng)];
      if (x == y) continue;
      const auto fam = disjoint_paths(h, x, y, 3);
      REQUIRE(fam.paths.size() == 3);
      CHECK(ref::check_paths(h, fam, PathKind::PairPaths) == "");
      for (const auto& p : fam.paths) {
        CHECK(p.front() == x);
        CHECK(p.back() == y);
      }
      CHECK(std::is_sorted(fam.paths.begin(), fam.paths.end(),
                           [](const auto& a, const auto& b) { return a[1] < b[1]; }));
    }
  }

  TEST_CASE("adjacent endpoints with one path give the edge") {
    const BurntPancakeGraph g(3);
    const SubgraphView all(g);
    const VertexId x = 0;
    const VertexId y = g.flip(0, 2);
    const auto fam = disjoint_paths(all, x, y, 1);
    REQUIRE(fam.paths.size() == 1);
    CHECK(fam.paths[0] == std::vector<VertexId>{x, y});
  }

  TEST_CASE("the 8-cycle has two disjoint paths") {
    const BurntPancakeGraph g(2);
    const SubgraphView all(g);
    for (VertexId x = 0; x < 8; ++x)
      for (VertexId y = 0; y < 8; ++y) {
        if (x == y) continue;
        try {
          disjoint_paths(all, x, y, 3);
          FAIL("three paths on a cycle");
        } catch (const InfeasibleError& e) {
          CHECK(e.achievable() == 2);
        }
        const auto fam = disjoint_paths(all, x, y, 2);
        CHECK(ref::check_paths(all, fam, PathKind::PairPaths) == "");
        CHECK(fam.paths[0].size() + fam.paths[1].size() == 10);
      }
    CHECK_THROWS_AS(disjoint_paths(all, 1, 1, 1), std::invalid_argument);
  }

  TEST_CASE("fans") {
    const BurntPancakeGraph g(3);
    const auto h = cluster_view(g, -3);
    const auto members = g.cluster_members(-3);
    for (VertexId w : members)
      for (VertexId a : members)
        for (VertexId b : members) {
          if (w == a || w == b || a >= b) continue;
          const auto fam = fan(h, w, {a, b}, 2);
          REQUIRE(fam.paths.size() == 2);
          CHECK(ref::check_paths(h, fam, PathKind::Fan) == "");
          CHECK(fam.paths[0].back() == a);
          CHECK(fam.paths[1].back() == b);
        }
    const SubgraphView all(g);
    const VertexId x = 7;
    const auto star = fan(all, x, g.neighbours(x), 3);
    for (const auto& p : star.paths) CHECK(p.size() == 2);
  }

  TEST_CASE("pinned fans") {
    const BurntPancakeGraph g(4);
    const auto h = cluster_view(g, 4);
    const auto members = g.cluster_members(4);
    const VertexId x = members[0];
    std::vector<VertexId> targets(members.end() - 6, members.end());
    FanPins pins;
    pins.required_targets = {targets[5], targets[4]};
    const auto fam = fan(h, x, targets, 3, pins);
    REQUIRE(fam.paths.size() == 3);
    CHECK(ref::check_paths(h, fam, PathKind::Fan) == "");
    std::set<VertexId> ends;
    for (const auto& p : fam.paths) ends.insert(p.back());
    CHECK(ends.count(targets[5]));
    CHECK(ends.count(targets[4]));

    FanPins hops;
    hops.first_hops = {g.flip(x, 1), g.flip(x, 2)};
    const auto two = fan(h, x, targets, 2, hops);
    for (const auto& p : two.paths) CHECK(std::count(hops.first_hops.begin(), hops.first_hops.end(), p[1]) == 1);
    CHECK_THROWS_AS(fan(h, x, targets, 3, hops), InfeasibleError);

    // Opposite clusters have no edge between them.
    const auto split = subgraph(g, [&g](VertexId v) { return g.cluster(v) == 4 || g.cluster(v) == -4; });
    FanPins far;
    far.required_targets = {g.cluster_members(-4)[0]};
    std::vector<VertexId> mixed{members[5], far.required_targets[0]};
    CHECK_THROWS_AS(fan(split, x, mixed, 1, far), InfeasibleError);
    CHECK_THROWS_AS(fan(h, x, {x, members[1]}, 1), std::invalid_argument);
  }

  TEST_CASE("set to set paths") {
    const BurntPancakeGraph g(4);
    const SubgraphView all(g);
    const std::vector<VertexId> xs{1, 2, 3};
    const auto same = set_to_set_paths(all, xs, xs, 3);
    for (const auto& p : same.paths) CHECK(p.size() == 1);

    const auto h = subgraph(g, [&g](VertexId v) { return g.cluster(v) == 2 || g.cluster(v) == -3; });
    const auto a = g.cluster_members(2);
    const auto b = g.cluster_members(-3);
    const auto fam = set_to_set_paths(h, a, b, 4);
    REQUIRE(fam.paths.size() == 4);
    CHECK(ref::check_paths(h, fam, PathKind::SetToSet) == "");
    for (const auto& p : fam.paths) {
      CHECK(g.cluster(p.front()) == 2);
      CHECK(g.cluster(p.back()) == -3);
    }
    const auto cut = static_cast<int>(cross_edges(g, 2, -3).size());
    REQUIRE(cut == 8);
    try {
      set_to_set_paths(h, a, b, cut + 1);
      FAIL("more paths than cross edges");
    } catch (const InfeasibleError& e) {
      CHECK(e.achievable() == cut);
    }
  }

  TEST_CASE("terminal trees") {
    const BurntPancakeGraph g(4);
    const SubgraphView all(g);
    CHECK(terminal_tree(all, {5}) == Tree::single(5));
    const VertexId u = 9;
    const VertexId v = g.flip(9, 3);
    const Tree e = terminal_tree(all, {u, v});
    CHECK(e.edges == std::vector<EdgeIds>{make_edge(u, v)});

    const auto h = cluster_view(g, -2);
    const auto members = g.cluster_members(-2);
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<VertexId> s;
      std::sample(members.begin(), members.end(), std::back_inserter(s), 4, rng);
      const Tree t = terminal_tree(h, s);
      STreeFamily fam{4, s, {t}, {}, false};
      CHECK(ref::family_ok(g, s, fam, 1));
      CHECK(leaves(t) <= 4);
      for (VertexId w : t.vertices) CHECK(g.cluster(w) == -2);
    }
    const auto split = subgraph(g, [&g](VertexId w) { return g.cluster(w) == 1 || g.cluster(w) == -1; });
    CHECK_THROWS_AS(terminal_tree(split, {g.cluster_members(1)[0], g.cluster_members(-1)[0]}), InfeasibleError);
    CHECK_THROWS_AS(terminal_tree(all, {}), std::invalid_argument);
  }

  TEST_CASE("minimum vertex cuts") {
    const BurntPancakeGraph g2(2);
    const SubgraphView cyc(g2);
    for (VertexId x = 0; x < 8; ++x) {
      // The vertex four steps round the cycle.
      VertexId prev = x;
      VertexId cur = g2.neighbours(x)[0];
      for (int step = 1; step < 4; ++step) {
        const auto nb = g2.neighbours(cur);
        const VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      CHECK(min_vertex_cut(cyc, x, cur) == 2);
    }
    const BurntPancakeGraph g3(3);
    const SubgraphView all(g3);
    const auto everything = [](VertexId) { return true; };
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 25) {
      const auto s = ref::random_set(g3, 2, rng);
      if (g3.adjacent(s[0], s[1])) continue;
      CHECK(min_vertex_cut(all, s[0], s[1]) == brute_separator(g3, s[0], s[1], 3, everything));
      ++checked;
    }
  }

  TEST_CASE("flow agrees with Menger") {
    const BurntPancakeGraph g(3);
    const SubgraphView all(g);
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 200; ++rep) {
      const auto s = ref::random_set(g, 2, rng);
      const int k = min_vertex_cut(all, s[0], s[1]);
      CHECK(k == 3);
      const auto fam = disjoint_paths(all, s[0], s[1], k);
      CHECK(ref::check_paths(all, fam, PathKind::PairPaths) == "");
      CHECK_THROWS_AS(disjoint_paths(all, s[0], s[1], k + 1), InfeasibleError);
    }
    // A sparser view, where the cut varies.
    const auto h = subgraph(g, [&g](VertexId v) { return g.cluster(v) != 1 && g.cluster(v) != -2; });
    const auto in_h = [&h](VertexId v) { return h.contains(v); };
    const auto verts = h.vertices();
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<VertexId> s;
      std::sample(verts.begin(), verts.end(), std::back_inserter(s), 2, rng);
      if (g.adjacent(s[0], s[1])) continue;
      const int k = min_vertex_cut(h, s[0], s[1]);
      CHECK(k == brute_separator(g, s[0], s[1], 3, in_h));
      if (k > 0) CHECK(ref::check_paths(h, disjoint_paths(h, s[0], s[1], k), PathKind::PairPaths) == "");
      CHECK_THROWS_AS(disjoint_paths(h, s[0], s[1], k + 1), InfeasibleError);
    }
  }
}
