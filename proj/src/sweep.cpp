#include "bpn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include "bpn/builder.hpp"
#include "bpn/verifier.hpp"
#include "json.hpp"

namespace bpn {

std::uint64_t binomial(std::uint64_t count, int k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > count) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (count - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::vector<VertexId>> random_subsets(const BurntPancakeGraph& g, int k, std::size_t count,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<VertexId>> out;
  out.reserve(count);
  const auto nv = static_cast<std::uint64_t>(g.vertex_count());
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<VertexId> s;
    while (s.size() < static_cast<std::size_t>(k)) {
      const auto v = static_cast<VertexId>(rng() % nv);
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Next k-subset in lexicographic order; false after the last one.
bool next_subset(std::vector<VertexId>& s, VertexId nv) {
  const int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < nv - static_cast<VertexId>(k - i)) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void process(const BurntPancakeGraph& g, int k, const std::vector<VertexId>& s, SweepSummary& part) {
  ++part.total;
  try {
    const STreeFamily fam = k == 3 ? build_idsts_3(g, s) : build_idsts(g, s);
    const VerificationReport rep = verify_family(g, s, fam, g.n() - 1);
    if (!rep.ok) {
      part.failures.push_back({s, rep.summary(g)});
      return;
    }
    ++part.verified;
    if (fam.repaired) ++part.repaired;
    const int count = static_cast<int>(fam.trees.size());
    part.min_trees = part.min_trees < 0 ? count : std::min(part.min_trees, count);
    part.max_trees = std::max(part.max_trees, count);
    if (!fam.case_trace.empty()) ++part.tags[fam.case_trace.front()];
    for (const std::string& l : fam.case_trace) ++part.labels[l];
  } catch (const std::exception& e) {
    part.failures.push_back({s, e.what()});
  }
}

void merge(SweepSummary& into, SweepSummary&& part) {
  into.total += part.total;
  into.verified += part.verified;
  into.repaired += part.repaired;
  if (part.min_trees >= 0) into.min_trees = into.min_trees < 0 ? part.min_trees : std::min(into.min_trees, part.min_trees);
  into.max_trees = std::max(into.max_trees, part.max_trees);
  for (auto& [key, c] : part.tags) into.tags[key] += c;
  for (auto& [key, c] : part.labels) into.labels[key] += c;
  for (auto& f : part.failures) into.failures.push_back(std::move(f));
}

}  // namespace

SweepSummary run_sweep(const BurntPancakeGraph& g, const SweepConfig& cfg) {
  if (cfg.n != g.n()) throw std::invalid_argument("sweep: config n does not match the graph");
  if (cfg.k != 3 && cfg.k != 4) throw std::invalid_argument("sweep: k must be 3 or 4");
  if (cfg.jobs < 1) throw std::invalid_argument("sweep: jobs must be positive");
  const auto nv = static_cast<VertexId>(g.vertex_count());
  if (nv < static_cast<VertexId>(cfg.k)) throw std::invalid_argument("sweep: graph smaller than k");
  if (cfg.mode == SweepMode::Exhaustive && binomial(nv, cfg.k) >= cfg.ceiling)
    throw std::invalid_argument("sweep: exhaustive mode needs fewer than " + std::to_string(cfg.ceiling) +
                                " subsets, have " + std::to_string(binomial(nv, cfg.k)));

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<VertexId>> sample;
  if (cfg.mode == SweepMode::Sample) sample = random_subsets(g, cfg.k, cfg.sample_size, cfg.seed);

  std::atomic<bool> stop{false};
  const auto worker = [&](int w) {
    SweepSummary part;
    const auto stride = static_cast<std::size_t>(cfg.jobs);
    if (cfg.mode == SweepMode::Sample) {
      for (std::size_t i = static_cast<std::size_t>(w); i < sample.size() && !stop; i += stride) {
        process(g, cfg.k, sample[i], part);
        if (cfg.fail_fast && !part.failures.empty()) stop = true;
      }
      return part;
    }
    std::vector<VertexId> s(cfg.k);
    for (int i = 0; i < cfg.k; ++i) s[i] = static_cast<VertexId>(i);
    std::size_t index = 0;
    do {
      if (index++ % stride != static_cast<std::size_t>(w)) continue;
      process(g, cfg.k, s, part);
      if (cfg.fail_fast && !part.failures.empty()) stop = true;
    } while (!stop && next_subset(s, nv));
    return part;
  };

  std::vector<std::future<SweepSummary>> parts;
  for (int w = 1; w < cfg.jobs; ++w) parts.push_back(std::async(std::launch::async, worker, w));
  SweepSummary sum = worker(0);
  for (auto& f : parts) merge(sum, f.get());
  std::sort(sum.failures.begin(), sum.failures.end(), [](const auto& a, const auto& b) { return a.s < b.s; });
  sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sum;
}

std::string summary_to_json(const BurntPancakeGraph& g, const SweepConfig& cfg, const SweepSummary& sum,
                            bool with_time, int indent) {
  nlohmann::json out;
  out["n"] = cfg.n;
  out["k"] = cfg.k;
  out["mode"] = cfg.mode == SweepMode::Exhaustive ? "exhaustive" : "sample";
  if (cfg.mode == SweepMode::Sample) {
    out["sample_size"] = cfg.sample_size;
    out["seed"] = cfg.seed;
  }
  out["total"] = sum.total;
  out["verified"] = sum.verified;
  out["repaired"] = sum.repaired;
  out["repair_rate"] = sum.repair_rate();
  out["min_trees"] = sum.min_trees;
  out["max_trees"] = sum.max_trees;
  out["tags"] = sum.tags;
  out["labels"] = sum.labels;
  nlohmann::json failures = nlohmann::json::array();
  for (const SweepFailure& f : sum.failures) {
    nlohmann::json s = nlohmann::json::array();
    for (VertexId v : f.s) s.push_back(g.vertex(v).symbols());
    failures.push_back({{"s", s}, {"reason", f.reason}});
  }
  out["failures"] = failures;
  if (with_time) out["seconds"] = sum.seconds;
  out["ok"] = sum.ok();
  return out.dump(indent);
}

}  // namespace bpn
