#pragma once

// Reference implementations used as test oracles. None of this calls into the
// library's construction or verification code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bpn/connectivity.hpp"
#include "bpn/graph.hpp"
#include "bpn/tree.hpp"

namespace ref {

using Perm = std::vector<int>;

inline Perm flip(Perm x, int i) {
  std::reverse(x.begin(), x.begin() + i);
  for (int k = 0; k < i; ++k) x[k] = -x[k];
  return x;
}

// Every signed permutation of 1..n, in no particular order.
inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm base(n);
  std::iota(base.begin(), base.end(), 1);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Perm p = base;
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1) p[k] = -p[k];
      out.push_back(p);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline bool adjacent(const Perm& a, const Perm& b) {
  for (int i = 1; i <= static_cast<int>(a.size()); ++i)
    if (flip(a, i) == b) return true;
  return false;
}

// Adjacency of BP_n in library ids, derived from reference flips and the text form.
inline std::map<bpn::VertexId, std::set<bpn::VertexId>> adjacency(const bpn::BurntPancakeGraph& g) {
  std::map<bpn::VertexId, std::set<bpn::VertexId>> adj;
  for (const Perm& p : all_perms(g.n())) {
    const bpn::VertexId v = g.id(bpn::SignedPermutation(p));
    for (int i = 1; i <= g.n(); ++i) adj[v].insert(g.id(bpn::SignedPermutation(flip(p, i))));
  }
  return adj;
}

// Path family check written from the definitions, sharing nothing with the flow code.
inline std::string check_paths(const bpn::SubgraphView& h, const bpn::PathFamily& fam, bpn::PathKind kind) {
  const bpn::BurntPancakeGraph& g = h.graph();
  for (const auto& p : fam.paths) {
    if (p.empty()) return "empty path";
    if (std::set<bpn::VertexId>(p.begin(), p.end()).size() != p.size()) return "path repeats a vertex";
    for (bpn::VertexId v : p)
      if (!h.contains(v)) return "vertex outside the view";
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      const Perm a = g.vertex(p[k]).symbols();
      const Perm b = g.vertex(p[k + 1]).symbols();
      if (!adjacent(a, b)) return "consecutive vertices not adjacent";
    }
  }
  const auto& ps = fam.paths;
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      std::set<bpn::VertexId> va(ps[a].begin(), ps[a].end());
      std::set<bpn::VertexId> common;
      for (bpn::VertexId v : ps[b])
        if (va.count(v)) common.insert(v);
      std::set<bpn::VertexId> allowed;
      if (kind == bpn::PathKind::PairPaths) {
        if (ps[a].front() != ps[b].front() || ps[a].back() != ps[b].back()) return "pair paths with different ends";
        allowed = {ps[a].front(), ps[a].back()};
      } else if (kind == bpn::PathKind::Fan) {
        if (ps[a].front() != ps[b].front()) return "fan paths with different origins";
        if (ps[a].back() == ps[b].back()) return "fan paths share a target";
        allowed = {ps[a].front()};
      }
      for (bpn::VertexId v : common)
        if (!allowed.count(v)) return "paths share an inner vertex";
    }
  return "";
}

// Set-algebra reading of the IDST definition.
inline bool family_ok(const bpn::BurntPancakeGraph& g, const std::vector<bpn::VertexId>& s,
                      const std::vector<std::pair<std::set<bpn::VertexId>, std::set<std::pair<bpn::VertexId, bpn::VertexId>>>>& trees,
                      std::size_t expected) {
  if (trees.size() != expected) return false;
  const std::set<bpn::VertexId> sset(s.begin(), s.end());
  for (const auto& [vs, es] : trees) {
    for (const auto& [a, b] : es) {
      if (!vs.count(a) || !vs.count(b) || a == b) return false;
      if (!adjacent(g.vertex(a).symbols(), g.vertex(b).symbols())) return false;
    }
    if (es.size() + 1 != vs.size()) return false;
    if (!std::includes(vs.begin(), vs.end(), sset.begin(), sset.end())) return false;
    // Connected: grow a set from one vertex until it stops changing.
    std::set<bpn::VertexId> reached{*vs.begin()};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& [a, b] : es)
        if (reached.count(a) != reached.count(b)) {
          reached.insert(a);
          reached.insert(b);
          grew = true;
        }
    }
    if (reached != vs) return false;
  }
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      std::set<bpn::VertexId> vi;
      std::set_intersection(trees[i].first.begin(), trees[i].first.end(), trees[j].first.begin(), trees[j].first.end(),
                            std::inserter(vi, vi.begin()));
      if (vi != sset) return false;
      std::set<std::pair<bpn::VertexId, bpn::VertexId>> ei;
      std::set_intersection(trees[i].second.begin(), trees[i].second.end(), trees[j].second.begin(),
                            trees[j].second.end(), std::inserter(ei, ei.begin()));
      if (!ei.empty()) return false;
    }
  return true;
}

inline bool family_ok(const bpn::BurntPancakeGraph& g, const std::vector<bpn::VertexId>& s, const bpn::STreeFamily& fam,
                      std::size_t expected) {
  std::vector<std::pair<std::set<bpn::VertexId>, std::set<std::pair<bpn::VertexId, bpn::VertexId>>>> trees;
  for (const bpn::Tree& t : fam.trees) {
    std::set<std::pair<bpn::VertexId, bpn::VertexId>> es;
    for (auto [a, b] : t.edges) es.insert({std::min(a, b), std::max(a, b)});
    trees.push_back({{t.vertices.begin(), t.vertices.end()}, es});
  }
  return family_ok(g, s, trees, expected);
}

inline std::vector<bpn::VertexId> random_set(const bpn::BurntPancakeGraph& g, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<bpn::VertexId> pick(0, static_cast<bpn::VertexId>(g.vertex_count() - 1));
  std::vector<bpn::VertexId> s;
  while (s.size() < k) {
    const bpn::VertexId v = pick(rng);
    if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
  }
  return s;
}

inline bpn::VertexId vid(const bpn::BurntPancakeGraph& g, const Perm& p) { return g.id(bpn::SignedPermutation(p)); }

}  // namespace ref
