#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpn/graph.hpp"

namespace bpn {

enum class SweepMode { Exhaustive, Sample };

struct SweepConfig {
  int n = 3;
  int k = 4;  // terminal set size, 3 or 4
  SweepMode mode = SweepMode::Sample;
  std::size_t sample_size = 1000;
  std::uint64_t seed = 42;
  int jobs = 1;
  bool fail_fast = false;
  std::uint64_t ceiling = 1'000'000;  // largest subset count allowed in exhaustive mode
};

struct SweepFailure {
  std::vector<VertexId> s;
  std::string reason;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t verified = 0;
  std::size_t repaired = 0;
  int min_trees = -1;
  int max_trees = -1;
  std::map<std::string, std::size_t> tags;    // first case_trace entry
  std::map<std::string, std::size_t> labels;  // every case_trace entry
  std::vector<SweepFailure> failures;         // sorted by S
  double seconds = 0;

  bool ok() const { return failures.empty() && verified == total; }
  double repair_rate() const { return total == 0 ? 0.0 : static_cast<double>(repaired) / static_cast<double>(total); }
};

/// C(count, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t count, int k);

/// The sample used by Sample mode: `count` sorted k-subsets drawn from the seed.
std::vector<std::vector<VertexId>> random_subsets(const BurntPancakeGraph& g, int k, std::size_t count,
                                                  std::uint64_t seed);

/// Builds and verifies every subset of the configured mode. Workers take
/// subsets by stride and return their own partial summaries, merged at the end.
/// Throws std::invalid_argument on a bad config.
SweepSummary run_sweep(const BurntPancakeGraph& g, const SweepConfig& cfg);

/// Wall time is left out unless asked for, so equal runs give equal bytes.
std::string summary_to_json(const BurntPancakeGraph& g, const SweepConfig& cfg, const SweepSummary& sum,
                            bool with_time = false, int indent = 2);

}  // namespace bpn
