#include <algorithm>
#include <set>

#include "planners.hpp"

namespace bpn::detail {

PlanResult plan_all_separate(const BurntPancakeGraph& g, const std::vector<VertexId>& s_in, int variant) {
  PlanResult res;
  std::vector<VertexId> s = s_in;
  std::sort(s.begin(), s.end());
  const Frame f = normalize_on(g, s, s[0]);
  const int n = g.n();
  const int trees = n - 1;
  Workspace ws(g, f.s, trees);

  std::set<ClusterId> occupied;
  for (VertexId v : f.s) occupied.insert(g.cluster(v));
  // Hub candidates: clusters without terminals, those no terminal faces
  // across an opposite pair first.
  std::vector<std::pair<int, ClusterId>> ranked;
  for (int idx = 0; idx < 2 * n; ++idx) {
    const ClusterId c = cluster_from_index(idx);
    if (occupied.count(c)) continue;
    ranked.push_back({occupied.count(-c) ? 1 : 0, c});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (static_cast<int>(ranked.size()) < trees) return res;
  std::vector<std::vector<ClusterId>> hubs;
  for (int t = 0; t < trees; ++t) hubs.push_back({ranked[t].second});
  std::vector<ClusterId> extras;
  for (std::size_t k = trees; k < ranked.size(); ++k) extras.push_back(ranked[k].second);
  bool paired = false;
  for (int t = 0; t < trees; ++t) {
    if (!ranked[t].first) continue;
    const ClusterId h = hubs[t][0];
    for (auto it = extras.begin(); it != extras.end(); ++it)
      if (*it != -h) {
        hubs[t].push_back(*it);
        extras.erase(it);
        paired = true;
        break;
      }
  }
  std::rotate(hubs.begin(), hubs.begin() + variant % trees, hubs.end());
  for (int t = 0; t < trees; ++t) ws.set_hub(t, hubs[t]);
  res.trace.push_back(paired ? "all_separate/paired_hubs" : "all_separate/single_hubs");
  auto out = complete(ws, res.trace, variant / trees);
  if (out) res.trees = map_back(g, *out, f.map);
  return res;
}

}  // namespace bpn::detail
