#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bpn/graph.hpp"

namespace bpn {

struct CheckReport {
  bool ok = true;
  std::string detail;  // first counterexample when !ok
  std::uint64_t cases = 0;

  static CheckReport fail(std::string why, std::uint64_t cases = 0) { return {false, std::move(why), cases}; }
};

/// Edges with one endpoint in G^i and the other in G^j. Throws if i == j.
std::vector<EdgeIds> cross_edges(const BurntPancakeGraph& g, ClusterId i, ClusterId j);

/// (n-2)! 2^(n-2) for non-opposite pairs, 0 for opposite pairs.
std::uint64_t expected_cross_edges(int n, ClusterId i, ClusterId j);

int girth(const BurntPancakeGraph& g);

CheckReport check_counts(const BurntPancakeGraph& g);
CheckReport check_cross_edge_counts(const BurntPancakeGraph& g);

/// No two members of a cluster share an out-neighbour, and the out-neighbours
/// of a closed in-cluster neighbourhood land in n distinct clusters.
CheckReport check_out_neighbour_facts(const BurntPancakeGraph& g);
/// Same check against a substitute out-neighbour map.
CheckReport check_out_neighbour_facts(const BurntPancakeGraph& g, const std::function<VertexId(VertexId)>& out);

/// For x in G^i with out(x) in G^j, j not in {i, -i}: x(1) stays in G^i and
/// its out-neighbour lies in G^-j.
CheckReport check_flip_crossing(const BurntPancakeGraph& g);

/// G^j minus {x, x(i)} stays connected. Exhaustive when samples == 0.
CheckReport check_cluster_pair_removal(const BurntPancakeGraph& g, std::size_t samples = 0, std::uint64_t seed = 1);

/// Each cluster relabelled by reduce_to_cluster is edge-for-edge BP_{n-1}.
CheckReport check_cluster_isomorphism(const BurntPancakeGraph& g);

struct ConnectivitySample {
  int minimum = -1;
  std::uint64_t pairs = 0;
  std::pair<VertexId, VertexId> witness;  // a pair attaining the minimum
};

/// Minimum number of internally disjoint paths over vertex pairs, by max-flow.
/// All pairs when samples == 0, otherwise `samples` random distinct pairs.
ConnectivitySample local_connectivity_min(const BurntPancakeGraph& g, std::size_t samples = 0, std::uint64_t seed = 1);

/// The minimum above equals n.
CheckReport check_vertex_connectivity(const BurntPancakeGraph& g, std::size_t samples = 0, std::uint64_t seed = 1);

}  // namespace bpn
