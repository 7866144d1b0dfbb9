#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "bpn/signed_permutation.hpp"

namespace bpn {

using VertexId = std::uint32_t;
using EdgeIds = std::pair<VertexId, VertexId>;

inline EdgeIds make_edge(VertexId u, VertexId v) { return u < v ? EdgeIds{u, v} : EdgeIds{v, u}; }

/// Default ceiling on n for explicit construction; BPN_MAX_N overrides it.
int default_max_n();

/// BP_n with dense vertex ids in canonical order (id == rank).
class BurntPancakeGraph {
public:
  /// Throws std::invalid_argument if n < 2 or n exceeds the construction ceiling.
  explicit BurntPancakeGraph(int n);
  BurntPancakeGraph(int n, int max_n);

  int n() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::uint64_t edge_count() const { return static_cast<std::uint64_t>(vertices_.size()) * n_ / 2; }

  const SignedPermutation& vertex(VertexId v) const { return vertices_[v]; }
  VertexId id(const SignedPermutation& x) const;
  bool contains(const SignedPermutation& x) const;

  /// x(i) as an id, 1 <= i <= n.
  VertexId flip(VertexId v, int i) const;
  VertexId out(VertexId v) const { return flip(v, n_); }
  ClusterId cluster(VertexId v) const { return vertices_[v].last(); }
  VertexId gamma(VertexId v, int i) const;

  /// Neighbours sorted by id.
  std::vector<VertexId> neighbours(VertexId v) const;
  template <class F>
  void for_each_neighbour(VertexId v, F&& f) const {
    if (!adjacency_.empty()) {
      const VertexId* row = adjacency_.data() + static_cast<std::size_t>(v) * n_;
      for (int k = 0; k < n_; ++k) f(row[k]);
    } else {
      for (VertexId u : neighbours(v)) f(u);
    }
  }
  bool adjacent(VertexId u, VertexId v) const;
  /// Reversal length i with u(i) == v, or 0 if not adjacent.
  int flip_between(VertexId u, VertexId v) const;

  /// All vertex ids of cluster c, ascending.
  std::vector<VertexId> cluster_members(ClusterId c) const;

private:
  int n_;
  std::vector<SignedPermutation> vertices_;
  std::vector<VertexId> adjacency_;  // n entries per vertex, sorted; empty above the materialization limit
};

/// Shared read-only graph per n, built on first use.
std::shared_ptr<const BurntPancakeGraph> shared_graph(int n);

/// A predicate-restricted view of a graph. Never copies adjacency.
class SubgraphView {
public:
  using Predicate = std::function<bool(VertexId)>;

  explicit SubgraphView(const BurntPancakeGraph& g) : g_(&g) {}
  SubgraphView(const BurntPancakeGraph& g, Predicate allowed) : g_(&g), allowed_(std::move(allowed)) {}

  const BurntPancakeGraph& graph() const { return *g_; }
  bool contains(VertexId v) const { return !allowed_ || allowed_(v); }

  template <class F>
  void for_each_neighbour(VertexId v, F&& f) const {
    g_->for_each_neighbour(v, [&](VertexId u) {
      if (contains(u)) f(u);
    });
  }
  std::vector<VertexId> neighbours(VertexId v) const;
  std::vector<VertexId> vertices() const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  int degree(VertexId v) const;
  bool is_connected() const;

private:
  const BurntPancakeGraph* g_;
  Predicate allowed_;
};

SubgraphView subgraph(const BurntPancakeGraph& g, SubgraphView::Predicate allowed);
SubgraphView cluster_view(const BurntPancakeGraph& g, ClusterId c);

/// The automorphism x -> forward∘x and its inverse.
struct Automorphism {
  SignedPermutation forward;
  SignedPermutation backward;

  SignedPermutation apply(const SignedPermutation& x) const { return left_multiply(forward, x); }
  SignedPermutation undo(const SignedPermutation& x) const { return left_multiply(backward, x); }
  VertexId apply(const BurntPancakeGraph& g, VertexId v) const { return g.id(apply(g.vertex(v))); }
  VertexId undo(const BurntPancakeGraph& g, VertexId v) const { return g.id(undo(g.vertex(v))); }
  ClusterId apply_cluster(ClusterId c) const { return map_cluster(forward, c); }
  ClusterId undo_cluster(ClusterId c) const { return map_cluster(backward, c); }
};

/// Automorphism sending anchor to the identity permutation.
Automorphism normalize(const BurntPancakeGraph& g, const SignedPermutation& anchor);

/// Relabel a member of cluster c of BP_n to a vertex of BP_{n-1}: drop the last
/// symbol and compress the remaining magnitudes, keeping signs.
SignedPermutation reduce_to_cluster(const SignedPermutation& x);
/// Inverse of reduce_to_cluster for the given cluster label.
SignedPermutation lift_from_cluster(const SignedPermutation& y, ClusterId c);

}  // namespace bpn
