#include "workspace.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace bpn::detail {

Workspace::Workspace(const BurntPancakeGraph& g, std::vector<VertexId> terminals, int trees)
    : g_(g), terminals_(std::move(terminals)), trees_(trees), owner_(g.vertex_count(), kFree), edges_(trees),
      hubs_(trees), hub_mask_(trees, std::vector<char>(2 * g.n(), 0)) {
  for (VertexId v : terminals_) owner_[v] = kTerminal;
}

int Workspace::edge_owner(VertexId u, VertexId v) const {
  auto it = edge_owner_.find(key(u, v));
  return it == edge_owner_.end() ? kFree : it->second;
}

bool Workspace::path_ok(int t, const std::vector<VertexId>& path) const {
  if (path.empty()) return false;
  std::unordered_set<VertexId> seen;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (!usable(t, path[k]) || !seen.insert(path[k]).second) return false;
    if (k > 0) {
      if (!g_.adjacent(path[k - 1], path[k])) return false;
      const int e = edge_owner(path[k - 1], path[k]);
      if (e != kFree && e != t) return false;
    }
  }
  return true;
}

bool Workspace::claim(int t, const std::vector<VertexId>& path) {
  if (!path_ok(t, path)) return false;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (owner_[path[k]] == kFree) owner_[path[k]] = t;
    if (k > 0 && edge_owner_.emplace(key(path[k - 1], path[k]), t).second)
      edges_[t].push_back(make_edge(path[k - 1], path[k]));
  }
  return true;
}

void Workspace::set_hub(int t, const std::vector<ClusterId>& clusters) {
  hubs_[t] = clusters;
  std::fill(hub_mask_[t].begin(), hub_mask_[t].end(), 0);
  for (ClusterId c : clusters) hub_mask_[t][cluster_index(c)] = 1;
}

bool Workspace::hub_cluster_of_any(ClusterId c) const {
  for (int t = 0; t < trees_; ++t)
    if (hub_mask_[t][cluster_index(c)]) return true;
  return false;
}

std::vector<VertexId> Workspace::ordered_neighbours(VertexId v) const {
  std::vector<VertexId> nb = g_.neighbours(v);
  if (rng_) std::shuffle(nb.begin(), nb.end(), *rng_);
  return nb;
}

bool Workspace::reaches_hub(int t, VertexId v) const {
  if (in_hub(t, v)) return true;
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : edges_[t]) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::unordered_set<VertexId> seen{v};
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    const VertexId p = stack.back();
    stack.pop_back();
    if (in_hub(t, p)) return true;
    auto it = adj.find(p);
    if (it == adj.end()) continue;
    for (VertexId u : it->second)
      if (seen.insert(u).second) stack.push_back(u);
  }
  return false;
}

bool Workspace::region_allows(int t, VertexId v, Scope scope, ClusterId home) const {
  const ClusterId c = g_.cluster(v);
  switch (scope) {
    case Scope::OwnCluster: return c == home;
    case Scope::FreeClusters: return c == home || in_hub(t, v) || !hub_cluster_of_any(c);
    case Scope::Anywhere: return true;
  }
  return false;
}

bool Workspace::route_to_hub(int t, VertexId v, Scope scope) {
  if (reaches_hub(t, v)) return true;
  const ClusterId home = g_.cluster(v);
  std::unordered_map<VertexId, VertexId> parent{{v, v}};
  std::queue<VertexId> q;
  q.push(v);
  VertexId hit = v;
  VertexId hit_parent = v;
  bool found = false;
  while (!q.empty() && !found) {
    const VertexId p = q.front();
    q.pop();
    for (VertexId u : ordered_neighbours(p)) {
      if (parent.count(u) || edge_owner(p, u) != kFree) continue;
      const int o = owner_[u];
      if (o == t || (o == kFree && in_hub(t, u))) {
        hit = u;
        hit_parent = p;
        found = true;
        break;
      }
      if (o != kFree) continue;
      parent.emplace(u, p);
      if (region_allows(t, u, scope, home)) q.push(u);
    }
  }
  if (!found) return false;
  std::vector<VertexId> path{hit};
  for (VertexId p = hit_parent;; p = parent.at(p)) {
    path.push_back(p);
    if (p == v) break;
  }
  std::reverse(path.begin(), path.end());
  return claim(t, path);
}

std::vector<std::vector<VertexId>> Workspace::components(int t) const {
  std::unordered_map<VertexId, VertexId> parent;
  auto find = [&](VertexId a) {
    VertexId r = a;
    while (parent.at(r) != r) r = parent.at(r);
    while (parent.at(a) != r) {
      const VertexId next = parent.at(a);
      parent[a] = r;
      a = next;
    }
    return r;
  };
  std::vector<VertexId> order;
  auto add = [&](VertexId v) {
    if (parent.emplace(v, v).second) order.push_back(v);
  };
  for (VertexId s : terminals_) add(s);
  for (const auto& e : edges_[t]) {
    add(e.first);
    add(e.second);
  }
  for (const auto& e : edges_[t]) parent[find(e.first)] = find(e.second);
  std::unordered_map<VertexId, std::size_t> slot;
  std::vector<std::vector<VertexId>> comps;
  for (VertexId v : order) {
    const VertexId r = find(v);
    auto [it, fresh] = slot.emplace(r, comps.size());
    if (fresh) comps.emplace_back();
    comps[it->second].push_back(v);
  }
  return comps;
}

std::optional<Scope> Workspace::connect(int t, Scope max_scope) {
  Scope scope = Scope::OwnCluster;
  auto allowed = [&](VertexId u) {
    switch (scope) {
      case Scope::OwnCluster: return in_hub(t, u);
      case Scope::FreeClusters: return in_hub(t, u) || !hub_cluster_of_any(g_.cluster(u));
      case Scope::Anywhere: return true;
    }
    return false;
  };
  while (true) {
    const auto comps = components(t);
    if (comps.size() <= 1) return scope;
    std::unordered_map<VertexId, std::size_t> comp_of;
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (VertexId v : comps[c]) comp_of.emplace(v, c);
    std::unordered_map<VertexId, VertexId> parent;
    std::queue<VertexId> q;
    for (VertexId v : comps[0]) {
      parent.emplace(v, v);
      q.push(v);
    }
    bool found = false;
    VertexId hit = 0, hit_parent = 0;
    while (!q.empty() && !found) {
      const VertexId p = q.front();
      q.pop();
      for (VertexId u : ordered_neighbours(p)) {
        if (parent.count(u) || edge_owner(p, u) != kFree) continue;
        auto c = comp_of.find(u);
        if (c != comp_of.end()) {
          if (c->second == 0) continue;
          hit = u;
          hit_parent = p;
          found = true;
          break;
        }
        if (owner_[u] != kFree) continue;
        parent.emplace(u, p);
        if (allowed(u)) q.push(u);
      }
    }
    if (!found) {
      if (scope == max_scope || scope == Scope::Anywhere) return std::nullopt;
      scope = static_cast<Scope>(static_cast<int>(scope) + 1);
      continue;
    }
    std::vector<VertexId> path{hit};
    for (VertexId p = hit_parent;; p = parent.at(p)) {
      path.push_back(p);
      if (parent.at(p) == p) break;
    }
    if (!claim(t, path)) throw std::logic_error("connect produced an unclaimable path");
  }
}

std::optional<std::vector<Tree>> Workspace::finish() const {
  std::vector<Tree> out;
  const std::unordered_set<VertexId> terms(terminals_.begin(), terminals_.end());
  for (int t = 0; t < trees_; ++t) {
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : edges_[t]) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
    std::unordered_map<VertexId, VertexId> parent{{terminals_[0], terminals_[0]}};
    std::queue<VertexId> q;
    q.push(terminals_[0]);
    std::vector<EdgeIds> span;
    while (!q.empty()) {
      const VertexId p = q.front();
      q.pop();
      auto it = adj.find(p);
      if (it == adj.end()) continue;
      for (VertexId u : it->second)
        if (parent.emplace(u, p).second) {
          span.push_back(make_edge(p, u));
          q.push(u);
        }
    }
    for (VertexId s : terminals_)
      if (!parent.count(s)) return std::nullopt;
    // Prune non-terminal leaves.
    std::unordered_map<VertexId, std::vector<VertexId>> tadj;
    for (const auto& e : span) {
      tadj[e.first].push_back(e.second);
      tadj[e.second].push_back(e.first);
    }
    std::unordered_map<VertexId, int> degree;
    for (auto& [v, list] : tadj) degree[v] = static_cast<int>(list.size());
    std::vector<VertexId> leaves;
    for (auto& [v, d] : degree)
      if (d == 1 && !terms.count(v)) leaves.push_back(v);
    std::unordered_set<VertexId> removed;
    while (!leaves.empty()) {
      const VertexId v = leaves.back();
      leaves.pop_back();
      removed.insert(v);
      for (VertexId u : tadj[v]) {
        if (removed.count(u)) continue;
        if (--degree[u] == 1 && !terms.count(u)) leaves.push_back(u);
      }
    }
    std::vector<EdgeIds> kept;
    for (const auto& e : span)
      if (!removed.count(e.first) && !removed.count(e.second)) kept.push_back(e);
    out.push_back(Tree::from_edges(std::move(kept), terminals_));
  }
  return out;
}

}  // namespace bpn::detail
