#include <algorithm>
#include <map>

#include "planners.hpp"

namespace bpn::detail {

namespace {

struct Triple {
  VertexId x, y, z, w;  // original ids; x anchors the normalization
  int edges = 0;        // induced edges among x, y, z
};

// Pick the anchor by the induced subgraph on the three clustered terminals:
// none -> first; one edge -> an endpoint of it; path -> its centre.
Triple choose_roles(const BurntPancakeGraph& g, const std::vector<VertexId>& s, int variant) {
  std::map<ClusterId, std::vector<VertexId>> by_cluster;
  for (VertexId v : s) by_cluster[g.cluster(v)].push_back(v);
  std::vector<VertexId> three, one;
  for (auto& [c, list] : by_cluster) (list.size() == 3 ? three : one) = list;
  std::sort(three.begin(), three.end());
  Triple t{three[0], three[1], three[2], one[0]};
  auto adj = [&](VertexId a, VertexId b) { return g.adjacent(a, b); };
  const bool ab = adj(three[0], three[1]), ac = adj(three[0], three[2]), bc = adj(three[1], three[2]);
  t.edges = ab + ac + bc;
  if (t.edges == 1) {
    VertexId p, q, r;
    if (ab) p = three[0], q = three[1], r = three[2];
    else if (ac) p = three[0], q = three[2], r = three[1];
    else p = three[1], q = three[2], r = three[0];
    if (variant % 2 == 1) std::swap(p, q);
    t.x = p, t.y = q, t.z = r;
  } else if (t.edges == 2) {
    VertexId centre = ab && ac ? three[0] : (ab && bc ? three[1] : three[2]);
    std::vector<VertexId> ends;
    for (VertexId v : three)
      if (v != centre) ends.push_back(v);
    t.x = centre;
    // y = x(l), z = x(k) with l < k.
    if (g.flip_between(centre, ends[0]) < g.flip_between(centre, ends[1])) t.y = ends[0], t.z = ends[1];
    else t.y = ends[1], t.z = ends[0];
  } else if (variant % 3 != 0) {
    std::rotate(three.begin(), three.begin() + variant % 3, three.end());
    t.x = three[0], t.y = three[1], t.z = three[2];
  }
  return t;
}

}  // namespace

PlanResult plan_three_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s_in, int variant) {
  PlanResult res;
  const Triple roles = choose_roles(g, s_in, variant);
  const Frame f = normalize_on(g, {roles.x, roles.y, roles.z, roles.w}, roles.x);
  const VertexId x = f.s[0], y = f.s[1], z = f.s[2];
  const int n = g.n();
  Workspace ws(g, f.s, n - 1);
  auto tree = [](int i) { return i - 1; };  // tree for direction i
  for (int i = 1; i < n; ++i) ws.set_hub(tree(i), {i, -i});
  bool ok = true;
  auto claim = [&](int i, const std::vector<VertexId>& path) { ok = ok && ws.claim(tree(i), path); };

  if (roles.edges == 0) {
    res.trace.push_back("three_one/no_edges");
    for (int i = 1; i < n; ++i)
      for (VertexId v : {x, y, z}) claim(i, two_step(g, v, i));
  } else if (roles.edges == 1) {
    const int l = g.flip_between(x, y);
    // Gamma_l(x) = y and Gamma_1(y) = x.
    if (l == 1) {
      res.trace.push_back("three_one/one_edge/first_direction");
      claim(1, {x, y, g.out(y)});
      for (int i = 2; i < n; ++i) {
        claim(i, two_step(g, x, i));
        claim(i, two_step(g, y, i));
      }
    } else {
      res.trace.push_back("three_one/one_edge/chain");
      claim(l, {x, y});
      claim(l, two_step(g, y, l));
      claim(1, two_step(g, x, 1));
      const VertexId yh = g.out(y);
      const VertexId mid = g.gamma(yh, 1);
      claim(1, {y, yh, mid, g.out(mid)});
      for (int i = 2; i < n; ++i) {
        if (i == l) continue;
        claim(i, two_step(g, x, i));
        claim(i, two_step(g, y, i));
      }
    }
    for (int i = 1; i < n; ++i) claim(i, two_step(g, z, i));
  } else {
    const int l = g.flip_between(x, y);
    const int k = g.flip_between(x, z);
    ws.set_hub(tree(k), {k});
    claim(k, {x, y});
    claim(k, out_edge(g, z));
    claim(k, two_step(g, y, k));
    if (l == 1) {
      res.trace.push_back("three_one/two_edges/first_direction");
      ws.set_hub(tree(1), {1, -1});
      claim(1, out_edge(g, x));
      claim(1, out_edge(g, y));
      claim(1, {x, z});
    } else {
      claim(1, two_step(g, x, 1));
      claim(l, out_edge(g, x));
      if (variant % 2 == 0) {
        res.trace.push_back("three_one/two_edges/split_a");
        ws.set_hub(tree(1), {1, -l});
        ws.set_hub(tree(l), {-1, l});
        claim(1, two_step(g, y, l));
        claim(1, two_step(g, z, l));
        claim(l, out_edge(g, y));
        claim(l, {x, z});
      } else {
        res.trace.push_back("three_one/two_edges/split_b");
        ws.set_hub(tree(1), {1, l});
        ws.set_hub(tree(l), {-1, -l});
        claim(1, out_edge(g, y));
        claim(1, {x, z});
        claim(l, two_step(g, y, l));
        claim(l, two_step(g, z, l));
      }
    }
    for (int i = 2; i < n; ++i) {
      if (i == l || i == k) continue;
      for (VertexId v : {x, y, z}) claim(i, two_step(g, v, i));
    }
  }
  if (!ok) {
    res.trace.push_back("conflict/fixed_connectors");
    return res;
  }
  auto trees = complete(ws, res.trace, variant);
  if (trees) res.trees = map_back(g, *trees, f.map);
  return res;
}

}  // namespace bpn::detail
