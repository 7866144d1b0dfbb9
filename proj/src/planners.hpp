#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpn/builder.hpp"
#include "workspace.hpp"

namespace bpn::detail {

struct PlanResult {
  std::optional<std::vector<Tree>> trees;
  std::vector<std::string> trace;
};

// Each planner receives S in original coordinates and returns trees in
// original coordinates (unverified). `variant` selects alternative choices.
PlanResult plan_three_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, int variant);
PlanResult plan_two_two(const BurntPancakeGraph& g, const std::vector<VertexId>& s, int variant);
PlanResult plan_two_one_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, int variant);
PlanResult plan_all_separate(const BurntPancakeGraph& g, const std::vector<VertexId>& s, int variant);

// Shared helpers.
std::vector<VertexId> two_step(const BurntPancakeGraph& g, VertexId v, int i);
std::vector<VertexId> out_edge(const BurntPancakeGraph& g, VertexId v);

struct Frame {
  Automorphism map;
  std::vector<VertexId> s;  // normalized ids, same order as the input
};
Frame normalize_on(const BurntPancakeGraph& g, const std::vector<VertexId>& s, VertexId anchor);
std::vector<Tree> map_back(const BurntPancakeGraph& g, const std::vector<Tree>& trees, const Automorphism& map);

/// Route every terminal into every tree's hub, join each tree, and extract trees.
/// Appends labels describing any widening that was needed.
std::optional<std::vector<Tree>> complete(Workspace& ws, std::vector<std::string>& trace, int variant);

/// Internally disjoint x-y paths inside a cluster, avoiding reserved vertices when possible.
std::optional<std::vector<std::vector<VertexId>>> cluster_paths(const Workspace& ws, VertexId x, VertexId y, int k);

/// Reserve the x-y path family inside x's cluster with exits x(i) -> out(x(i)),
/// assigning the path through x(i) to tree i - 1. Returns false on conflict.
bool claim_pair_paths(Workspace& ws, VertexId x, VertexId y);

}  // namespace bpn::detail
