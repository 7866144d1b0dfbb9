#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "bpn/builder.hpp"
#include "bpn/verifier.hpp"
#include "workspace.hpp"

namespace bpn {

namespace {

using detail::Scope;
using detail::Workspace;

std::optional<STreeFamily> reroute(const BurntPancakeGraph& g, const std::vector<VertexId>& s,
                                   const STreeFamily& candidate, const VerificationReport& report, int count) {
  if (static_cast<int>(candidate.trees.size()) != count) return std::nullopt;
  std::set<int> bad;
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::WrongCount) return std::nullopt;
    // Drop the later tree of an overlapping pair; keep the earlier one.
    if (!v.trees.empty()) bad.insert(v.trees.back());
  }
  if (bad.empty() || static_cast<int>(bad.size()) >= count) return std::nullopt;
  Workspace ws(g, s, count);
  for (int t = 0; t < count; ++t) {
    if (bad.count(t)) continue;
    for (const auto& e : candidate.trees[t].edges)
      if (!ws.claim(t, {e.first, e.second})) return std::nullopt;
  }
  for (int t : bad)
    if (!ws.connect(t, Scope::Anywhere)) return std::nullopt;
  auto trees = ws.finish();
  if (!trees) return std::nullopt;
  STreeFamily fam = candidate;
  fam.trees = std::move(*trees);
  fam.case_trace.push_back("repair/reroute");
  fam.repaired = true;
  if (!verify_family(g, s, fam, count).ok) return std::nullopt;
  return fam;
}

std::optional<STreeFamily> pack(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const STreeFamily& candidate,
                                int count, std::mt19937_64& rng) {
  Workspace ws(g, s, count);
  ws.set_rng(&rng);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexId> terms = s;
  std::shuffle(terms.begin(), terms.end(), rng);
  // Each tree gets its own first edge at every terminal.
  std::set<std::pair<VertexId, int>> stubbed;
  for (VertexId v : terms) {
    std::vector<VertexId> nb = g.neighbours(v);
    std::shuffle(nb.begin(), nb.end(), rng);
    for (int t : order) {
      if (stubbed.count({v, t})) continue;
      for (VertexId u : nb) {
        if (ws.edge_owner(v, u) != Workspace::kFree || !ws.usable(t, u)) continue;
        if (ws.is_terminal(u) && stubbed.count({u, t})) continue;
        if (!ws.claim(t, {v, u})) continue;
        stubbed.insert({v, t});
        if (ws.is_terminal(u)) stubbed.insert({u, t});
        break;
      }
    }
  }
  for (int t : order)
    if (!ws.connect(t, Scope::Anywhere)) return std::nullopt;
  auto trees = ws.finish();
  if (!trees) return std::nullopt;
  STreeFamily fam;
  fam.n = g.n();
  fam.s = s;
  fam.trees = std::move(*trees);
  fam.case_trace = candidate.case_trace;
  fam.case_trace.push_back("repair/packing");
  fam.repaired = true;
  if (!verify_family(g, s, fam, count).ok) return std::nullopt;
  return fam;
}

}  // namespace

STreeFamily repair(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const STreeFamily& candidate,
                   const VerificationReport& report, const RepairOptions& opts) {
  const int count = opts.tree_count < 0 ? g.n() - 1 : opts.tree_count;
  if (verify_family(g, s, candidate, count).ok) return candidate;
  if (auto fam = reroute(g, s, candidate, report, count)) return *fam;
  std::mt19937_64 rng(opts.seed);
  for (int attempt = 0; attempt < opts.attempts; ++attempt)
    if (auto fam = pack(g, s, candidate, count, rng)) return *fam;
  throw ConstructionDefect("repair budget exhausted:\n" + report.summary(g));
}

}  // namespace bpn
