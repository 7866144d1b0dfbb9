#include "bpn/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace bpn {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotATree: return "not-a-tree";
    case ViolationKind::MissingTerminal: return "missing-terminal";
    case ViolationKind::VertexOverlap: return "vertex-overlap";
    case ViolationKind::EdgeOverlap: return "edge-overlap";
    case ViolationKind::EdgeNotInGraph: return "edge-not-in-graph";
    case ViolationKind::WrongCount: return "wrong-count";
  }
  return "unknown";
}

std::string VerificationReport::summary(const BurntPancakeGraph& g) const {
  if (ok) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += to_string(v.kind);
    if (!v.trees.empty()) {
      out += " trees";
      for (int t : v.trees) out += " " + std::to_string(t);
    }
    for (VertexId x : v.vertices) out += " [" + to_string(g.vertex(x)) + "]";
    for (const auto& e : v.edges) out += " [" + to_string(g.vertex(e.first)) + "]-[" + to_string(g.vertex(e.second)) + "]";
    if (!v.message.empty()) out += ": " + v.message;
  }
  return out;
}

namespace {

struct DisjointSets {
  std::unordered_map<VertexId, VertexId> parent;
  VertexId find(VertexId v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent.emplace(v, v);
      return v;
    }
    if (it->second == v) return v;
    const VertexId root = find(it->second);
    parent[v] = root;
    return root;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

void check_tree(const BurntPancakeGraph& g, const Tree& t, int index, VerificationReport& report) {
  std::vector<int> who;
  if (index >= 0) who.push_back(index);
  std::unordered_set<VertexId> vset;
  for (VertexId v : t.vertices) {
    if (v >= g.vertex_count()) {
      report.add({ViolationKind::NotATree, who, {}, {}, "vertex id out of range"});
      return;
    }
    if (!vset.insert(v).second) report.add({ViolationKind::NotATree, who, {v}, {}, "repeated vertex"});
  }
  if (vset.empty()) {
    report.add({ViolationKind::NotATree, who, {}, {}, "empty tree"});
    return;
  }
  std::set<EdgeIds> eset;
  DisjointSets dsu;
  for (VertexId v : vset) dsu.find(v);
  bool endpoints_ok = true;
  for (const auto& raw : t.edges) {
    const EdgeIds e = make_edge(raw.first, raw.second);
    if (e.first >= g.vertex_count() || e.second >= g.vertex_count()) {
      report.add({ViolationKind::EdgeNotInGraph, who, {}, {}, "edge endpoint id out of range"});
      endpoints_ok = false;
      continue;
    }
    if (!g.adjacent(e.first, e.second)) report.add({ViolationKind::EdgeNotInGraph, who, {}, {e}, ""});
    if (!vset.count(e.first) || !vset.count(e.second)) {
      report.add({ViolationKind::NotATree, who, {}, {e}, "edge endpoint missing from the vertex set"});
      endpoints_ok = false;
      continue;
    }
    if (!eset.insert(e).second) {
      report.add({ViolationKind::NotATree, who, {}, {e}, "repeated edge"});
      continue;
    }
    if (!dsu.unite(e.first, e.second)) report.add({ViolationKind::NotATree, who, {}, {e}, "edge closes a cycle"});
  }
  if (!endpoints_ok) return;
  std::unordered_set<VertexId> roots;
  for (VertexId v : vset) roots.insert(dsu.find(v));
  if (roots.size() != 1)
    report.add({ViolationKind::NotATree, who, {}, {}, "disconnected (" + std::to_string(roots.size()) + " components)"});
  if (eset.size() + 1 != vset.size() && roots.size() == 1 && report.ok)
    report.add({ViolationKind::NotATree, who, {}, {}, "|E| != |V| - 1"});
}

}  // namespace

VerificationReport verify_tree(const BurntPancakeGraph& g, const Tree& t) {
  VerificationReport report;
  check_tree(g, t, -1, report);
  return report;
}

VerificationReport verify_family(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const STreeFamily& fam,
                                 int expected_count) {
  VerificationReport report;
  const int count = static_cast<int>(fam.trees.size());
  if (count != expected_count)
    report.add({ViolationKind::WrongCount, {}, {}, {},
                "expected " + std::to_string(expected_count) + " trees, found " + std::to_string(count)});
  const std::unordered_set<VertexId> terminals(s.begin(), s.end());
  std::unordered_map<VertexId, int> vertex_owner;
  std::unordered_map<std::uint64_t, int> edge_owner;
  for (int i = 0; i < count; ++i) {
    const Tree& t = fam.trees[i];
    check_tree(g, t, i, report);
    const std::unordered_set<VertexId> vset(t.vertices.begin(), t.vertices.end());
    for (VertexId x : s)
      if (!vset.count(x)) report.add({ViolationKind::MissingTerminal, {i}, {x}, {}, ""});
    for (VertexId v : vset) {
      if (terminals.count(v)) continue;
      auto [it, fresh] = vertex_owner.emplace(v, i);
      if (!fresh) report.add({ViolationKind::VertexOverlap, {it->second, i}, {v}, {}, ""});
    }
    std::unordered_set<std::uint64_t> seen_here;
    for (const auto& raw : t.edges) {
      const EdgeIds e = make_edge(raw.first, raw.second);
      const std::uint64_t key = (static_cast<std::uint64_t>(e.first) << 32) | e.second;
      if (!seen_here.insert(key).second) continue;
      auto [it, fresh] = edge_owner.emplace(key, i);
      if (!fresh) report.add({ViolationKind::EdgeOverlap, {it->second, i}, {}, {e}, ""});
    }
  }
  return report;
}

}  // namespace bpn
