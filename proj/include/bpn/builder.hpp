#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpn/graph.hpp"
#include "bpn/tree.hpp"
#include "bpn/verifier.hpp"

namespace bpn {

enum class CaseTag { AllInOneCluster, ThreeOne, TwoTwo, TwoOneOne, AllSeparate };

std::string to_string(CaseTag tag);
const std::vector<CaseTag>& all_case_tags();

/// Tag from the multiset of per-cluster terminal counts. Throws on |s| != 4 or duplicates.
CaseTag classify(const BurntPancakeGraph& g, const std::vector<VertexId>& s);

/// Directions i in [n-1] split by where out(Gamma_i(.)) lands for three vertices of one cluster,
/// measured after normalizing x to the identity.
struct IndexPartition {
  std::vector<int> i1;  // x, z land in G^i; y in G^-i
  std::vector<int> i2;  // x in G^i; y, z in G^-i
  std::vector<int> i3;  // x, y in G^i; z in G^-i
  std::vector<int> i4;  // all three in G^i
};

/// Throws std::invalid_argument unless x, y, z are distinct members of one cluster.
IndexPartition index_partition(const BurntPancakeGraph& g, VertexId x, VertexId y, VertexId z);

struct InclusiveTree {
  Tree tree;
  EdgeIds bridge;
  ClusterId side_a = 0;  // cluster i
  ClusterId side_b = 0;  // cluster -i
};

/// A tree over in_terms (in G^i) and out_terms (in G^-i) joined through a
/// bridge a, a(1) in bridge_host with out(a) in G^i and out(a(1)) in G^-i.
/// Throws InfeasibleError if no bridge in the host works.
InclusiveTree inclusive_tree(const BurntPancakeGraph& g, ClusterId i, const std::vector<VertexId>& in_terms,
                             const std::vector<VertexId>& out_terms, ClusterId bridge_host,
                             const std::vector<VertexId>& forbidden = {});

struct BuildOptions {
  bool allow_repair = true;
  int variants = 4;               // alternative planner choices tried before repair
  int repair_attempts = 4000;     // randomized packing restarts
  std::uint64_t seed = 0x5eed;    // repair randomness
};

/// n-1 internally edge-disjoint S-trees for a 4-subset S. Always verified;
/// throws ConstructionDefect if no verified family is found.
STreeFamily build_idsts(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts = {});

/// Same contract for a 3-subset: augment with a fourth vertex, build, prune, re-verify.
STreeFamily build_idsts_3(const BurntPancakeGraph& g, const std::vector<VertexId>& s3, const BuildOptions& opts = {});

/// Per-case entry points; each requires the matching classification.
STreeFamily build_case_all_in_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts = {});
STreeFamily build_case_three_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts = {});
STreeFamily build_case_two_two(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts = {});
STreeFamily build_case_two_one_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts = {});
STreeFamily build_case_all_separate(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts = {});

struct RepairOptions {
  int tree_count = -1;  // defaults to n - 1
  int attempts = 4000;
  std::uint64_t seed = 0x5eed;
};

/// Turn a failing candidate into a verified family: re-route offending trees in
/// the residual graph, then fall back to randomized packing. A valid candidate
/// is returned unchanged. Throws ConstructionDefect when the budget runs out.
STreeFamily repair(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const STreeFamily& candidate,
                   const VerificationReport& report, const RepairOptions& opts = {});

/// Prune a tree to the minimal subtree spanning `keep`.
Tree prune_to(const Tree& t, const std::vector<VertexId>& keep);

}  // namespace bpn
