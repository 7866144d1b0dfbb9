#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

#include "bpn/connectivity.hpp"
#include "planners.hpp"

namespace bpn::detail {

namespace {

std::vector<std::vector<VertexId>> group_by_cluster(const BurntPancakeGraph& g, const std::vector<VertexId>& s) {
  std::map<ClusterId, std::vector<VertexId>> by_cluster;
  for (VertexId v : s) by_cluster[g.cluster(v)].push_back(v);
  std::vector<std::vector<VertexId>> groups;
  for (auto& [c, list] : by_cluster) {
    std::sort(list.begin(), list.end());
    groups.push_back(list);
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return groups;
}

std::string direction_label(const BurntPancakeGraph& g, ClusterId c) {
  if (c == -g.n()) return "opposite";
  return c > 0 ? "direction" : "barred_direction";
}

}  // namespace

PlanResult plan_two_two(const BurntPancakeGraph& g, const std::vector<VertexId>& s_in, int variant) {
  PlanResult res;
  auto groups = group_by_cluster(g, s_in);
  if (variant & 1) std::swap(groups[0], groups[1]);
  const Frame f = normalize_on(g, {groups[0][0], groups[0][1], groups[1][0], groups[1][1]}, groups[0][0]);
  const VertexId x = f.s[0], y = f.s[1], z = f.s[2], w = f.s[3];
  const int n = g.n();
  const int trees = n - 1;
  Workspace ws(g, f.s, trees);
  for (int t = 0; t < trees; ++t) ws.set_hub(t, {t + 1});
  const ClusterId c2 = g.cluster(z);
  res.trace.push_back("two_two/pair_paths/" + direction_label(g, c2));
  if (!claim_pair_paths(ws, x, y)) {
    res.trace.push_back("conflict/pair_paths");
    return res;
  }

  // Second pair: z-w paths inside their cluster, one per tree.
  std::vector<std::vector<VertexId>> q;
  if (auto strict = cluster_paths(ws, z, w, trees)) {
    q = *strict;
  } else {
    auto loose = subgraph(g, [&g, c2](VertexId v) { return g.cluster(v) == c2; });
    try {
      q = disjoint_paths(loose, z, w, trees).paths;
    } catch (const InfeasibleError&) {
      return res;
    }
  }

  // Cost of handing path p to tree t, lower is closer to the direct construction:
  // 0 the path already carries t's exit, 1 the cluster is t's hub, 2/3 an exit
  // into t's hub, 4 the cluster opposite t's hub joins the hub, 6/7 an exit into
  // the opposite cluster, 8/9 an exit into a cluster nobody uses.
  // Odd costs leave through z or w instead of an interior vertex.
  constexpr int kNo = INT_MAX / 8;
  std::vector<std::vector<int>> cost(trees, std::vector<int>(trees, kNo));
  std::vector<std::vector<VertexId>> gate(trees, std::vector<VertexId>(trees, 0));
  for (int p = 0; p < trees; ++p) {
    int forced = -1;
    for (std::size_t k = 1; k + 1 < q[p].size(); ++k) {
      const int o = ws.owner(q[p][k]);
      if (o >= 0) forced = o;
    }
    std::vector<VertexId> gates(q[p].begin() + 1, q[p].end() - 1);
    gates.push_back(z);
    gates.push_back(w);
    for (int t = 0; t < trees; ++t) {
      if (forced >= 0 && forced != t) continue;
      if (forced == t || ws.in_hub(t, z)) {
        cost[p][t] = forced == t ? 0 : 1;
        continue;
      }
      const ClusterId mine = t + 1;
      if (c2 == -mine) cost[p][t] = 4;
      for (std::size_t k = 0; k < gates.size(); ++k) {
        const VertexId u = gates[k];
        const int endpoint = (u == z || u == w) ? 1 : 0;
        const VertexId o = g.out(u);
        if (!ws.usable(t, o) || ws.is_terminal(o)) continue;
        const ClusterId oc = g.cluster(o);
        int c = kNo;
        if (ws.in_hub(t, o)) c = 2 + endpoint;
        else if (oc == -mine && !ws.hub_cluster_of_any(oc)) c = 6 + endpoint;
        else if (!ws.hub_cluster_of_any(oc)) c = 8 + endpoint;
        if (c < cost[p][t]) {
          cost[p][t] = c;
          gate[p][t] = u;
        }
      }
    }
  }
  std::vector<int> perm(trees), best;
  std::iota(perm.begin(), perm.end(), 0);
  int best_cost = kNo;
  do {
    int total = 0;
    for (int p = 0; p < trees && total < kNo; ++p) total += cost[p][perm[p]];
    if (total < best_cost) {
      best_cost = total;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) {
    res.trace.push_back("conflict/second_pair_assignment");
    return res;
  }
  bool widened = false;
  for (int p = 0; p < trees; ++p) {
    const int t = best[p];
    const int c = cost[p][t];
    if (!ws.claim(t, q[p])) return res;
    if (c == 4) {
      ws.set_hub(t, {t + 1, c2});
      widened = true;
    } else if (c >= 2) {
      if (!ws.claim(t, out_edge(g, gate[p][t]))) return res;
      if (c == 6 || c == 7) {
        ws.set_hub(t, {t + 1, -(t + 1)});
        widened = true;
      }
    }
  }
  if (c2 > 0 && c2 < n) res.trace.push_back("two_two/splice_in_direction_cluster");
  if (widened) res.trace.push_back("two_two/inclusive_hub");
  auto out = complete(ws, res.trace, variant / 2);
  if (out) res.trees = map_back(g, *out, f.map);
  return res;
}

PlanResult plan_two_one_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s_in, int variant) {
  PlanResult res;
  auto groups = group_by_cluster(g, s_in);
  const std::vector<VertexId>& pair = groups[0];
  const VertexId anchor = pair[variant % 2];
  const VertexId partner = pair[1 - variant % 2];
  const Frame f = normalize_on(g, {anchor, partner, groups[1][0], groups[2][0]}, anchor);
  const VertexId x = f.s[0], y = f.s[1], z = f.s[2], w = f.s[3];
  const int n = g.n();
  const int trees = n - 1;
  Workspace ws(g, f.s, trees);
  const bool inclusive = (variant / 2) % 2 == 1;
  for (int t = 0; t < trees; ++t) {
    if (inclusive) ws.set_hub(t, {t + 1, -(t + 1)});
    else ws.set_hub(t, {t + 1});
  }
  int directions = 0;
  for (VertexId v : {z, w}) {
    const ClusterId c = g.cluster(v);
    if (c > 0 && c < n) ++directions;
  }
  static const char* labels[] = {"two_one_one/no_direction_cluster", "two_one_one/one_direction_cluster",
                                 "two_one_one/two_direction_clusters"};
  res.trace.push_back(labels[directions]);
  if (inclusive) res.trace.push_back("two_one_one/inclusive_hubs");
  if (!claim_pair_paths(ws, x, y)) {
    res.trace.push_back("conflict/pair_paths");
    return res;
  }
  auto out = complete(ws, res.trace, variant / 4);
  if (out) res.trees = map_back(g, *out, f.map);
  return res;
}

}  // namespace bpn::detail
