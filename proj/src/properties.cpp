#include "bpn/properties.hpp"

#include "bpn/connectivity.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace bpn {

std::vector<EdgeIds> cross_edges(const BurntPancakeGraph& g, ClusterId i, ClusterId j) {
  if (i == j) throw std::invalid_argument("cross_edges: clusters must differ");
  std::vector<EdgeIds> out;
  for (VertexId v : g.cluster_members(i)) {
    const VertexId u = g.out(v);
    if (g.cluster(u) == j) out.push_back(make_edge(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t expected_cross_edges(int n, ClusterId i, ClusterId j) {
  if (i == -j) return 0;
  std::uint64_t c = 1;
  for (int k = 2; k <= n - 2; ++k) c *= k;
  return c << (n - 2);
}

int girth(const BurntPancakeGraph& g) {
  const std::size_t count = g.vertex_count();
  constexpr VertexId kNone = ~VertexId{0};
  int best = 0;
  std::vector<int> dist(count, -1);
  std::vector<VertexId> parent(count, kNone);
  for (VertexId root = 0; root < count; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> q;
    dist[root] = 0;
    parent[root] = kNone;
    q.push(root);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      if (best && 2 * dist[v] + 1 >= best) break;
      g.for_each_neighbour(v, [&](VertexId u) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (u != parent[v]) {
          const int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      });
    }
  }
  return best;
}

CheckReport check_counts(const BurntPancakeGraph& g) {
  const int n = g.n();
  std::uint64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  const std::uint64_t v_expected = fact << n;
  const std::uint64_t e_expected = static_cast<std::uint64_t>(n) * fact << (n - 1);
  if (g.vertex_count() != v_expected)
    return CheckReport::fail("vertex count " + std::to_string(g.vertex_count()) + " != " + std::to_string(v_expected));
  std::uint64_t twice_edges = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbours(v);
    std::set<VertexId> distinct(nb.begin(), nb.end());
    if (distinct.size() != static_cast<std::size_t>(n) || distinct.count(v))
      return CheckReport::fail("vertex " + to_string(g.vertex(v)) + " does not have n distinct neighbours");
    for (VertexId u : nb)
      if (!g.adjacent(u, v)) return CheckReport::fail("asymmetric adjacency at " + to_string(g.vertex(v)));
    twice_edges += nb.size();
  }
  if (twice_edges / 2 != e_expected)
    return CheckReport::fail("edge count " + std::to_string(twice_edges / 2) + " != " + std::to_string(e_expected));
  return {true, "", g.vertex_count()};
}

CheckReport check_cross_edge_counts(const BurntPancakeGraph& g) {
  const int n = g.n();
  std::uint64_t cases = 0;
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      if (a == b) continue;
      const ClusterId i = cluster_from_index(a);
      const ClusterId j = cluster_from_index(b);
      const auto found = cross_edges(g, i, j).size();
      if (found != expected_cross_edges(n, i, j))
        return CheckReport::fail("cross edges between G^" + std::to_string(i) + " and G^" + std::to_string(j) + ": " +
                                 std::to_string(found));
      ++cases;
    }
  }
  return {true, "", cases};
}

CheckReport check_out_neighbour_facts(const BurntPancakeGraph& g) {
  return check_out_neighbour_facts(g, [&g](VertexId v) { return g.out(v); });
}

CheckReport check_out_neighbour_facts(const BurntPancakeGraph& g, const std::function<VertexId(VertexId)>& out) {
  const int n = g.n();
  std::uint64_t cases = 0;
  for (int a = 0; a < 2 * n; ++a) {
    const ClusterId c = cluster_from_index(a);
    std::set<VertexId> seen;
    for (VertexId v : g.cluster_members(c)) {
      const VertexId o = out(v);
      if (g.cluster(o) == c) return CheckReport::fail("out-neighbour of " + to_string(g.vertex(v)) + " stays in its cluster");
      if (!seen.insert(o).second)
        return CheckReport::fail("shared out-neighbour " + to_string(g.vertex(o)) + " in cluster " + std::to_string(c));
      ++cases;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::set<ClusterId> clusters{g.cluster(out(v))};
    g.for_each_neighbour(v, [&](VertexId u) {
      if (g.cluster(u) == g.cluster(v)) clusters.insert(g.cluster(out(u)));
    });
    if (clusters.size() != static_cast<std::size_t>(n))
      return CheckReport::fail("closed neighbourhood of " + to_string(g.vertex(v)) + " reaches " +
                               std::to_string(clusters.size()) + " clusters");
    ++cases;
  }
  return {true, "", cases};
}

CheckReport check_flip_crossing(const BurntPancakeGraph& g) {
  if (g.n() < 3) throw std::invalid_argument("check_flip_crossing requires n >= 3");
  std::uint64_t cases = 0;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const ClusterId i = g.cluster(x);
    const VertexId xh = g.out(x);
    const ClusterId j = g.cluster(xh);
    if (j == i || j == -i) continue;
    const VertexId y = g.flip(x, 1);
    if (g.cluster(y) != i || g.cluster(g.out(y)) != -j)
      return CheckReport::fail("out(" + to_string(g.vertex(x)) + "(1)) is not in G^" + std::to_string(-j));
    ++cases;
  }
  return {true, "", cases};
}

namespace {

bool connected_without(const BurntPancakeGraph& g, ClusterId c, VertexId a, VertexId b) {
  auto view = subgraph(g, [&g, c, a, b](VertexId v) { return v != a && v != b && g.cluster(v) == c; });
  return view.is_connected();
}

}  // namespace

CheckReport check_cluster_pair_removal(const BurntPancakeGraph& g, std::size_t samples, std::uint64_t seed) {
  const int n = g.n();
  if (n < 3) throw std::invalid_argument("check_cluster_pair_removal requires n >= 3");
  std::uint64_t cases = 0;
  auto check_one = [&](VertexId x, int i) -> bool {
    ++cases;
    return connected_without(g, g.cluster(x), x, g.flip(x, i));
  };
  if (samples == 0) {
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      for (int i = 1; i < n; ++i)
        if (!check_one(x, i))
          return CheckReport::fail("removing " + to_string(g.vertex(x)) + " and its flip " + std::to_string(i) +
                                   " disconnects the cluster", cases);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick_v(0, static_cast<VertexId>(g.vertex_count() - 1));
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const VertexId x = pick_v(rng);
      const int i = pick_i(rng);
      if (!check_one(x, i))
        return CheckReport::fail("removing " + to_string(g.vertex(x)) + " and its flip " + std::to_string(i) +
                                 " disconnects the cluster", cases);
    }
  }
  return {true, "", cases};
}

CheckReport check_cluster_isomorphism(const BurntPancakeGraph& g) {
  const int n = g.n();
  if (n < 3) throw std::invalid_argument("check_cluster_isomorphism requires n >= 3");
  const BurntPancakeGraph smaller(n - 1, n - 1);
  std::uint64_t cases = 0;
  for (int a = 0; a < 2 * n; ++a) {
    const ClusterId c = cluster_from_index(a);
    const auto members = g.cluster_members(c);
    if (members.size() != smaller.vertex_count()) return CheckReport::fail("cluster size mismatch");
    std::set<VertexId> images;
    std::size_t inner_edges = 0;
    for (VertexId v : members) {
      const SignedPermutation r = reduce_to_cluster(g.vertex(v));
      if (lift_from_cluster(r, c) != g.vertex(v)) return CheckReport::fail("relabel does not round-trip");
      images.insert(smaller.id(r));
      g.for_each_neighbour(v, [&](VertexId u) {
        if (g.cluster(u) != c) return;
        ++inner_edges;
        if (!smaller.adjacent(smaller.id(r), smaller.id(reduce_to_cluster(g.vertex(u))))) {
          images.clear();
        }
      });
      if (images.empty()) return CheckReport::fail("edge not preserved in cluster " + std::to_string(c));
    }
    if (images.size() != smaller.vertex_count() || inner_edges / 2 != smaller.edge_count())
      return CheckReport::fail("cluster " + std::to_string(c) + " is not a relabelled BP_" + std::to_string(n - 1));
    ++cases;
  }
  return {true, "", cases};
}

ConnectivitySample local_connectivity_min(const BurntPancakeGraph& g, std::size_t samples, std::uint64_t seed) {
  ConnectivitySample out;
  const SubgraphView all(g);
  const auto visit = [&](VertexId x, VertexId y) {
    const int k = min_vertex_cut(all, x, y);
    ++out.pairs;
    if (out.minimum < 0 || k < out.minimum) {
      out.minimum = k;
      out.witness = {x, y};
    }
  };
  const auto nv = static_cast<VertexId>(g.vertex_count());
  if (samples == 0) {
    for (VertexId x = 0; x < nv; ++x)
      for (VertexId y = x + 1; y < nv; ++y) visit(x, y);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, nv - 1);
  while (out.pairs < samples) {
    const VertexId x = pick(rng);
    const VertexId y = pick(rng);
    if (x != y) visit(x, y);
  }
  return out;
}

CheckReport check_vertex_connectivity(const BurntPancakeGraph& g, std::size_t samples, std::uint64_t seed) {
  const ConnectivitySample c = local_connectivity_min(g, samples, seed);
  if (c.minimum != g.n())
    return CheckReport::fail("pair " + to_string(g.vertex(c.witness.first)) + " / " +
                                 to_string(g.vertex(c.witness.second)) + " has " + std::to_string(c.minimum) +
                                 " disjoint paths, expected " + std::to_string(g.n()),
                             c.pairs);
  return {true, "", c.pairs};
}

}  // namespace bpn
