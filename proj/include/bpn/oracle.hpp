#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpn/graph.hpp"
#include "bpn/tree.hpp"

namespace bpn {

struct OracleResult {
  std::vector<VertexId> s;
  int max_idsts_found = 0;
  STreeFamily certificate;
  /// The search finished inside the budget: either target trees were found or
  /// every candidate was ruled out. False means the count is only a lower bound.
  bool exhausted = false;
  std::uint64_t expansions = 0;
};

/// Backtracking search for `target` internally edge-disjoint S-trees. Edges
/// between two terminals are subdivided; the search then splits the remaining
/// vertices into classes that each connect S, forcing vertices a class cannot
/// lose and pruning by matching classes into terminal neighbourhoods. Counts
/// are tried upwards from a greedy seed. `budget` caps search nodes; 0 returns
/// the greedy seed alone, never marked exhausted.
OracleResult max_idsts_bruteforce(const BurntPancakeGraph& g, const std::vector<VertexId>& s, int target,
                                  std::uint64_t budget = 50'000'000);

/// delta(G) - 1 = n - 1.
int upper_bound_kappa4(const BurntPancakeGraph& g);

struct Kappa4Summary {
  std::size_t subsets = 0;
  int min_found = -1;           // minimum over S of the oracle maximum; -1 for an empty sample
  bool all_exhausted = true;
  bool matches_bound = true;    // min_found == n - 1, and the S attaining it was searched to exhaustion
  std::optional<std::vector<VertexId>> counterexample;
};

/// Run the oracle with target n on every S of the sample and compare the
/// minimum against n - 1. An empty sample gives an empty summary.
Kappa4Summary kappa4_exact_small(const BurntPancakeGraph& g, const std::vector<std::vector<VertexId>>& sample,
                                 std::uint64_t budget = 50'000'000);

/// Every 4-subset of V(g) in lexicographic order of ids.
std::vector<std::vector<VertexId>> all_four_subsets(const BurntPancakeGraph& g);

}  // namespace bpn
