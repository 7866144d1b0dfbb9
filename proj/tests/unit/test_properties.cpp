#include "bpn/builder.hpp"
#include "bpn/oracle.hpp"
#include "bpn/verifier.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bpn;

namespace {

// One random edit of a family; the result may or may not still be valid.
STreeFamily mutate(const BurntPancakeGraph& g, STreeFamily fam, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick_v(0, static_cast<VertexId>(g.vertex_count() - 1));
  auto& t = fam.trees[rng() % fam.trees.size()];
  switch (rng() % 7) {
    case 0:  // drop an edge
      if (!t.edges.empty()) t.edges.erase(t.edges.begin() + static_cast<long>(rng() % t.edges.size()));
      t = Tree::from_edges(t.edges, t.vertices);
      break;
    case 1: {  // hang a new edge off a tree vertex
      const VertexId v = t.vertices[rng() % t.vertices.size()];
      const VertexId u = g.flip(v, 1 + static_cast<int>(rng() % g.n()));
      auto edges = t.edges;
      edges.push_back(make_edge(u, v));
      t = Tree::from_edges(edges, t.vertices);
      break;
    }
    case 2:  // duplicate a tree
      fam.trees.push_back(fam.trees[0]);
      break;
    case 3:  // lose a tree
      fam.trees.pop_back();
      break;
    case 4: {  // connect two arbitrary vertices
      auto edges = t.edges;
      edges.push_back(make_edge(pick_v(rng), pick_v(rng)));
      t = Tree::from_edges(edges, t.vertices);
      break;
    }
    case 5: {  // add an isolated vertex
      auto verts = t.vertices;
      verts.push_back(pick_v(rng));
      t = Tree::from_edges(t.edges, verts);
      break;
    }
    default:
      break;  // left intact
  }
  return fam;
}

}  // namespace

TEST_SUITE("property") {
  TEST_CASE("prefix reversal is an involution") {
    for (int n = 2; n <= 4; ++n)
      for (const auto& p : ref::all_perms(n)) {
        const SignedPermutation x(p);
        for (int i = 1; i <= n; ++i) CHECK(prefix_reversal(prefix_reversal(x, i), i) == x);
      }
  }

  TEST_CASE("gamma neighbours are total") {
    for (int n = 2; n <= 4; ++n)
      for (const auto& p : ref::all_perms(n)) {
        const SignedPermutation x(p);
        for (int i = 1; i <= n; ++i) {
          if (i == std::abs(p.back())) {
            CHECK_THROWS_AS(gamma_neighbour(x, i), std::invalid_argument);
            continue;
          }
          const auto y = gamma_neighbour(x, i);
          CHECK(ref::adjacent(p, y.symbols()));
          CHECK(cluster_of(y) == cluster_of(x));
          CHECK(std::abs(cluster_of(out_neighbour(y))) == i);
        }
      }
  }

  TEST_CASE("left multiplication is an automorphism of BP3") {
    const BurntPancakeGraph g(3);
    const auto adj = ref::adjacency(g);
    for (VertexId gv = 0; gv < g.vertex_count(); ++gv) {
      const SignedPermutation m = g.vertex(gv);
      std::set<VertexId> image;
      for (const auto& [v, nb] : adj) {
        const VertexId mv = g.id(left_multiply(m, g.vertex(v)));
        image.insert(mv);
        CHECK(g.cluster(mv) == map_cluster(m, g.cluster(v)));
        for (VertexId u : nb) CHECK(adj.at(mv).count(g.id(left_multiply(m, g.vertex(u)))) == 1);
      }
      CHECK(image.size() == g.vertex_count());
    }
  }

  TEST_CASE("index sets partition the directions") {
    for (int n = 3; n <= 4; ++n) {
      const BurntPancakeGraph g(n);
      std::mt19937_64 rng(40 + n);
      for (int a = 0; a < 2 * n; ++a) {
        const auto m = g.cluster_members(cluster_from_index(a));
        const std::size_t limit = n == 3 ? m.size() : 12;
        for (std::size_t i = 0; i < limit; ++i)
          for (std::size_t j = 0; j < limit; ++j)
            for (std::size_t k = 0; k < limit; ++k) {
              const VertexId x = m[n == 3 ? i : rng() % m.size()];
              const VertexId y = m[n == 3 ? j : rng() % m.size()];
              const VertexId z = m[n == 3 ? k : rng() % m.size()];
              if (x == y || y == z || x == z) continue;
              if (g.adjacent(x, y) || g.adjacent(y, z) || g.adjacent(x, z)) continue;
              const auto p = index_partition(g, x, y, z);
              std::vector<int> all;
              for (const auto* set : {&p.i1, &p.i2, &p.i3, &p.i4}) all.insert(all.end(), set->begin(), set->end());
              std::sort(all.begin(), all.end());
              std::vector<int> want(n - 1);
              std::iota(want.begin(), want.end(), 1);
              CHECK(all == want);
            }
      }
    }
  }

  TEST_CASE("every 4-subset of BP3 gets one tag") {
    const BurntPancakeGraph g(3);
    std::map<CaseTag, std::size_t> counts;
    const auto nv = static_cast<VertexId>(g.vertex_count());
    for (VertexId a = 0; a < nv; ++a)
      for (VertexId b = a + 1; b < nv; ++b)
        for (VertexId c = b + 1; c < nv; ++c)
          for (VertexId d = c + 1; d < nv; ++d) {
            const CaseTag t = classify(g, {a, b, c, d});
            std::map<ClusterId, int> per;
            for (VertexId v : {a, b, c, d}) ++per[g.vertex(v).symbols().back()];
            const std::size_t distinct = per.size();
            int top = 0;
            for (auto [cl, k] : per) top = std::max(top, k);
            CaseTag want = CaseTag::AllSeparate;
            if (distinct == 1) want = CaseTag::AllInOneCluster;
            else if (distinct == 2) want = top == 3 ? CaseTag::ThreeOne : CaseTag::TwoTwo;
            else if (distinct == 3) want = CaseTag::TwoOneOne;
            CHECK(t == want);
            ++counts[t];
          }
    std::size_t total = 0;
    for (auto [t, k] : counts) total += k;
    CHECK(total == 194580);
    CHECK(counts.size() == 5);
    // Six clusters of eight vertices.
    CHECK(counts[CaseTag::AllInOneCluster] == 6 * 70);
    CHECK(counts[CaseTag::AllSeparate] == 15 * 4096);
  }

  TEST_CASE("verifier agrees with the set-algebra reading") {
    std::mt19937_64 rng(2024);
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    for (int n = 3; n <= 4; ++n) {
      const BurntPancakeGraph g(n);
      for (int k = 0; k < 500; ++k) {
        const auto s = ref::random_set(g, 4, rng);
        const auto fam = build_idsts(g, s);
        const auto candidate = k % 4 == 0 ? fam : mutate(g, fam, rng);
        const bool lib = verify_family(g, s, candidate, n - 1).ok;
        const bool refv = ref::family_ok(g, s, candidate, static_cast<std::size_t>(n - 1));
        CHECK(lib == refv);
        (lib ? accepted : rejected) += 1;
      }
    }
    CHECK(accepted >= 250);
    CHECK(rejected >= 250);
  }

  TEST_CASE("oracle never beats the degree") {
    const BurntPancakeGraph g(3);
    std::mt19937_64 rng(71);
    for (int k = 0; k < 30; ++k) {
      const auto s = ref::random_set(g, 4, rng);
      const auto r = max_idsts_bruteforce(g, s, 5);
      CHECK(r.max_idsts_found <= g.n());
      CHECK(ref::family_ok(g, s, r.certificate, static_cast<std::size_t>(r.max_idsts_found)));
    }
  }
}
