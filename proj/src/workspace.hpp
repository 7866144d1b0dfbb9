#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "bpn/graph.hpp"
#include "bpn/tree.hpp"

namespace bpn::detail {

/// How far a route or a hub join may wander.
enum class Scope {
  OwnCluster,   // the starting vertex's cluster, plus the landing vertex
  FreeClusters, // additionally clusters that are no tree's hub
  Anywhere,     // any vertex not owned by another tree
};

/// Call-local reservation ledger for building several edge-disjoint trees
/// that share only the terminals.
class Workspace {
public:
  static constexpr int kFree = -1;
  static constexpr int kTerminal = -2;

  Workspace(const BurntPancakeGraph& g, std::vector<VertexId> terminals, int trees);

  const BurntPancakeGraph& graph() const { return g_; }
  int tree_count() const { return trees_; }
  const std::vector<VertexId>& terminals() const { return terminals_; }
  bool is_terminal(VertexId v) const { return owner_[v] == kTerminal; }
  int owner(VertexId v) const { return owner_[v]; }
  int edge_owner(VertexId u, VertexId v) const;
  bool usable(int t, VertexId v) const { return owner_[v] == kFree || owner_[v] == t || owner_[v] == kTerminal; }

  bool path_ok(int t, const std::vector<VertexId>& path) const;
  /// All-or-nothing reservation of a path for tree t.
  bool claim(int t, const std::vector<VertexId>& path);

  void set_hub(int t, const std::vector<ClusterId>& clusters);
  const std::vector<ClusterId>& hub(int t) const { return hubs_[t]; }
  bool in_hub(int t, VertexId v) const { return hub_mask_[t][cluster_index(g_.cluster(v))] != 0; }
  bool hub_cluster_of_any(ClusterId c) const;

  /// True when v already reaches t's hub through t's reserved edges (or sits in it).
  bool reaches_hub(int t, VertexId v) const;

  /// Shortest path from terminal v into t's hub (or onto t's structure) through
  /// free vertices, restricted by scope. Reserves it on success.
  bool route_to_hub(int t, VertexId v, Scope scope);

  /// Join every piece of tree t into one component, widening the search
  /// region up to max_scope. Returns the scope actually needed, or nullopt.
  std::optional<Scope> connect(int t, Scope max_scope);

  /// Spanning tree of each tree's reservations, pruned to terminal leaves.
  /// nullopt when some tree misses a terminal.
  std::optional<std::vector<Tree>> finish() const;

  /// Shuffle neighbour order in searches (repair only).
  void set_rng(std::mt19937_64* rng) { rng_ = rng; }

  std::vector<std::string> notes;

private:
  static std::uint64_t key(VertexId u, VertexId v) {
    const EdgeIds e = make_edge(u, v);
    return (static_cast<std::uint64_t>(e.first) << 32) | e.second;
  }
  std::vector<VertexId> ordered_neighbours(VertexId v) const;
  bool region_allows(int t, VertexId v, Scope scope, ClusterId home) const;
  std::vector<std::vector<VertexId>> components(int t) const;

  const BurntPancakeGraph& g_;
  std::vector<VertexId> terminals_;
  int trees_;
  std::vector<int> owner_;
  std::unordered_map<std::uint64_t, int> edge_owner_;
  std::vector<std::vector<EdgeIds>> edges_;
  std::vector<std::vector<ClusterId>> hubs_;
  std::vector<std::vector<char>> hub_mask_;
  std::mt19937_64* rng_ = nullptr;
};

}  // namespace bpn::detail
