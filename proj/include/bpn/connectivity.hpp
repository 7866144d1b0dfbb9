#pragma once

#include <vector>

#include "bpn/graph.hpp"
#include "bpn/tree.hpp"

namespace bpn {

enum class PathKind { PairPaths, Fan, SetToSet };

struct PathFamily {
  PathKind kind = PathKind::PairPaths;
  std::vector<std::vector<VertexId>> paths;
};

/// Restrictions on a fan: every required target must end a path, and the
/// first hop out of the origin must come from first_hops when it is nonempty.
struct FanPins {
  std::vector<VertexId> required_targets;
  std::vector<VertexId> first_hops;
};

/// k internally disjoint x-y paths in h, sorted by their second vertex.
/// Throws InfeasibleError carrying the maximum achievable k.
PathFamily disjoint_paths(const SubgraphView& h, VertexId x, VertexId y, int k);

/// k internally disjoint paths from x to distinct members of targets, ordered
/// by the position of their endpoint in targets.
PathFamily fan(const SubgraphView& h, VertexId x, const std::vector<VertexId>& targets, int k, const FanPins& pins = {});

/// k pairwise vertex-disjoint paths from xs to ys, ordered by start vertex position in xs.
PathFamily set_to_set_paths(const SubgraphView& h, const std::vector<VertexId>& xs, const std::vector<VertexId>& ys,
                            int k);

/// A tree in h containing every terminal, grown by attaching each terminal in
/// the given order through a shortest path to the partial tree.
Tree terminal_tree(const SubgraphView& h, const std::vector<VertexId>& terminals);

/// Maximum number of internally disjoint x-y paths.
int min_vertex_cut(const SubgraphView& h, VertexId x, VertexId y);

}  // namespace bpn
