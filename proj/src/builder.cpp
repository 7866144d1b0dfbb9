#include "bpn/builder.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "bpn/connectivity.hpp"
#include "planners.hpp"

namespace bpn {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::AllInOneCluster: return "AllInOneCluster";
    case CaseTag::ThreeOne: return "ThreeOne";
    case CaseTag::TwoTwo: return "TwoTwo";
    case CaseTag::TwoOneOne: return "TwoOneOne";
    case CaseTag::AllSeparate: return "AllSeparate";
  }
  return "unknown";
}

const std::vector<CaseTag>& all_case_tags() {
  static const std::vector<CaseTag> tags{CaseTag::AllInOneCluster, CaseTag::ThreeOne, CaseTag::TwoTwo,
                                         CaseTag::TwoOneOne, CaseTag::AllSeparate};
  return tags;
}

namespace {

void check_terminals(const BurntPancakeGraph& g, const std::vector<VertexId>& s, std::size_t size) {
  if (s.size() != size) throw std::invalid_argument("expected " + std::to_string(size) + " terminals");
  std::set<VertexId> distinct(s.begin(), s.end());
  if (distinct.size() != s.size()) throw std::invalid_argument("terminals must be distinct");
  for (VertexId v : s)
    if (v >= g.vertex_count()) throw std::invalid_argument("terminal id out of range");
}

std::vector<int> cluster_counts(const BurntPancakeGraph& g, const std::vector<VertexId>& s) {
  std::map<ClusterId, int> counts;
  for (VertexId v : s) ++counts[g.cluster(v)];
  std::vector<int> out;
  for (auto& [c, k] : counts) out.push_back(k);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

CaseTag classify(const BurntPancakeGraph& g, const std::vector<VertexId>& s) {
  check_terminals(g, s, 4);
  const auto counts = cluster_counts(g, s);
  if (counts[0] == 4) return CaseTag::AllInOneCluster;
  if (counts[0] == 3) return CaseTag::ThreeOne;
  if (counts[0] == 2) return counts[1] == 2 ? CaseTag::TwoTwo : CaseTag::TwoOneOne;
  return CaseTag::AllSeparate;
}

IndexPartition index_partition(const BurntPancakeGraph& g, VertexId x, VertexId y, VertexId z) {
  if (x == y || y == z || x == z) throw std::invalid_argument("index_partition: vertices must be distinct");
  if (g.cluster(x) != g.cluster(y) || g.cluster(x) != g.cluster(z))
    throw std::invalid_argument("index_partition: vertices must share a cluster");
  const Automorphism a = normalize(g, g.vertex(x));
  const SignedPermutation ny = a.apply(g.vertex(y));
  const SignedPermutation nz = a.apply(g.vertex(z));
  IndexPartition p;
  for (int i = 1; i < g.n(); ++i) {
    const bool y_in = cluster_of(out_neighbour(gamma_neighbour(ny, i))) == i;
    const bool z_in = cluster_of(out_neighbour(gamma_neighbour(nz, i))) == i;
    if (!y_in && z_in) p.i1.push_back(i);
    else if (!y_in && !z_in) p.i2.push_back(i);
    else if (y_in && !z_in) p.i3.push_back(i);
    else p.i4.push_back(i);
  }
  return p;
}

InclusiveTree inclusive_tree(const BurntPancakeGraph& g, ClusterId i, const std::vector<VertexId>& in_terms,
                             const std::vector<VertexId>& out_terms, ClusterId bridge_host,
                             const std::vector<VertexId>& forbidden) {
  if (bridge_host == i || bridge_host == -i) throw std::invalid_argument("inclusive_tree: host must be a third cluster");
  for (VertexId v : in_terms)
    if (g.cluster(v) != i) throw std::invalid_argument("inclusive_tree: in_terms must lie in G^i");
  for (VertexId v : out_terms)
    if (g.cluster(v) != -i) throw std::invalid_argument("inclusive_tree: out_terms must lie in G^-i");
  const std::unordered_set<VertexId> banned(forbidden.begin(), forbidden.end());
  std::unordered_set<VertexId> terms(in_terms.begin(), in_terms.end());
  terms.insert(out_terms.begin(), out_terms.end());
  for (VertexId a : g.cluster_members(bridge_host)) {
    if (g.vertex(a).first() != -i) continue;  // out(a) lands in G^{-first(a)}
    const VertexId b = g.flip(a, 1);
    const VertexId ah = g.out(a), bh = g.out(b);
    if (banned.count(a) || banned.count(b) || banned.count(ah) || banned.count(bh)) continue;
    if (terms.count(a) || terms.count(b)) continue;
    auto side = [&](ClusterId c, VertexId extra) {
      return subgraph(g, [&g, &banned, c, extra](VertexId v) {
        return g.cluster(v) == c && (v == extra || !banned.count(v));
      });
    };
    try {
      std::vector<VertexId> left{ah};
      left.insert(left.end(), in_terms.begin(), in_terms.end());
      std::vector<VertexId> right{bh};
      right.insert(right.end(), out_terms.begin(), out_terms.end());
      const Tree t1 = terminal_tree(side(i, ah), left);
      const Tree t2 = terminal_tree(side(-i, bh), right);
      std::vector<EdgeIds> edges = t1.edges;
      edges.insert(edges.end(), t2.edges.begin(), t2.edges.end());
      edges.push_back(make_edge(a, ah));
      edges.push_back(make_edge(a, b));
      edges.push_back(make_edge(b, bh));
      std::vector<VertexId> extra{a, b, ah, bh};
      extra.insert(extra.end(), terms.begin(), terms.end());
      return InclusiveTree{Tree::from_edges(std::move(edges), extra), make_edge(a, b), i, -i};
    } catch (const InfeasibleError&) {
      continue;
    }
  }
  throw InfeasibleError("no usable bridge in the host cluster", 0);
}

Tree prune_to(const Tree& t, const std::vector<VertexId>& keep) {
  const std::unordered_set<VertexId> kept(keep.begin(), keep.end());
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : t.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::unordered_map<VertexId, int> degree;
  for (VertexId v : t.vertices) degree[v] = static_cast<int>(adj[v].size());
  std::unordered_set<VertexId> removed;
  std::vector<VertexId> leaves;
  for (VertexId v : t.vertices)
    if (degree[v] <= 1 && !kept.count(v)) leaves.push_back(v);
  while (!leaves.empty()) {
    const VertexId v = leaves.back();
    leaves.pop_back();
    if (!removed.insert(v).second) continue;
    for (VertexId u : adj[v])
      if (!removed.count(u) && --degree[u] <= 1 && !kept.count(u)) leaves.push_back(u);
  }
  std::vector<EdgeIds> edges;
  for (const auto& e : t.edges)
    if (!removed.count(e.first) && !removed.count(e.second)) edges.push_back(e);
  std::vector<VertexId> extra;
  for (VertexId v : t.vertices)
    if (!removed.count(v)) extra.push_back(v);
  return Tree::from_edges(std::move(edges), extra);
}

namespace detail {

std::vector<VertexId> two_step(const BurntPancakeGraph& g, VertexId v, int i) {
  const VertexId mid = g.gamma(v, i);
  return {v, mid, g.out(mid)};
}

std::vector<VertexId> out_edge(const BurntPancakeGraph& g, VertexId v) { return {v, g.out(v)}; }

Frame normalize_on(const BurntPancakeGraph& g, const std::vector<VertexId>& s, VertexId anchor) {
  Frame f{normalize(g, g.vertex(anchor)), {}};
  for (VertexId v : s) f.s.push_back(f.map.apply(g, v));
  return f;
}

std::vector<Tree> map_back(const BurntPancakeGraph& g, const std::vector<Tree>& trees, const Automorphism& map) {
  std::vector<Tree> out;
  for (const Tree& t : trees) {
    std::vector<EdgeIds> edges;
    for (const auto& e : t.edges) edges.push_back(make_edge(map.undo(g, e.first), map.undo(g, e.second)));
    std::vector<VertexId> verts;
    for (VertexId v : t.vertices) verts.push_back(map.undo(g, v));
    out.push_back(Tree::from_edges(std::move(edges), verts));
  }
  return out;
}

std::optional<std::vector<Tree>> complete(Workspace& ws, std::vector<std::string>& trace, int variant) {
  const int trees = ws.tree_count();
  std::vector<int> order(trees);
  for (int t = 0; t < trees; ++t) order[t] = (t + variant) % trees;
  std::vector<VertexId> terms = ws.terminals();
  if (variant % 2 == 1) std::reverse(terms.begin(), terms.end());
  bool relayed = false, borrowed_route = false;
  for (Scope scope : {Scope::OwnCluster, Scope::FreeClusters, Scope::Anywhere}) {
    for (int t : order)
      for (VertexId v : terms) {
        if (ws.reaches_hub(t, v)) continue;
        if (ws.route_to_hub(t, v, scope)) {
          if (scope == Scope::FreeClusters) relayed = true;
          if (scope == Scope::Anywhere) borrowed_route = true;
        }
      }
  }
  if (relayed) trace.push_back("route/relay");
  if (borrowed_route) trace.push_back("route/borrowed");
  bool bridged = false, borrowed_join = false;
  for (int t : order) {
    auto scope = ws.connect(t, Scope::Anywhere);
    if (!scope) return std::nullopt;
    if (*scope == Scope::FreeClusters) bridged = true;
    if (*scope == Scope::Anywhere) borrowed_join = true;
  }
  if (bridged) trace.push_back("join/bridge");
  if (borrowed_join) trace.push_back("join/borrowed");
  return ws.finish();
}

std::optional<std::vector<std::vector<VertexId>>> cluster_paths(const Workspace& ws, VertexId x, VertexId y, int k) {
  const BurntPancakeGraph& g = ws.graph();
  const ClusterId c = g.cluster(x);
  auto strict = subgraph(g, [&](VertexId v) {
    return g.cluster(v) == c && (v == x || v == y || ws.owner(v) == Workspace::kFree);
  });
  try {
    return disjoint_paths(strict, x, y, k).paths;
  } catch (const InfeasibleError&) {
  }
  return std::nullopt;
}

bool claim_pair_paths(Workspace& ws, VertexId x, VertexId y) {
  const BurntPancakeGraph& g = ws.graph();
  const int n = g.n();
  auto paths = cluster_paths(ws, x, y, n - 1);
  if (!paths) return false;
  for (const auto& p : *paths) {
    const VertexId hop = p[1];
    const int i = g.flip_between(x, hop);
    if (i < 1 || i >= n) return false;
    std::vector<VertexId> route = p;
    if (!ws.claim(i - 1, route)) return false;
    if (!ws.claim(i - 1, out_edge(g, hop))) return false;
  }
  return true;
}

}  // namespace detail

namespace {

using detail::PlanResult;

STreeFamily make_family(const BurntPancakeGraph& g, const std::vector<VertexId>& s, std::vector<Tree> trees,
                        std::vector<std::string> trace) {
  STreeFamily fam;
  fam.n = g.n();
  fam.s = s;
  fam.trees = std::move(trees);
  fam.case_trace = std::move(trace);
  return fam;
}

// n = 2: BP_2 is an 8-cycle; keep the cycle minus the longest gap between terminals.
STreeFamily build_cycle(const BurntPancakeGraph& g, const std::vector<VertexId>& s) {
  std::vector<VertexId> cycle{0};
  while (cycle.size() < g.vertex_count()) {
    const auto nb = g.neighbours(cycle.back());
    const VertexId prev = cycle.size() > 1 ? cycle[cycle.size() - 2] : nb.back();
    cycle.push_back(nb[0] == prev ? nb[1] : nb[0]);
  }
  const std::size_t len = cycle.size();
  std::unordered_set<VertexId> terms(s.begin(), s.end());
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < len; ++k)
    if (terms.count(cycle[k])) pos.push_back(k);
  // Gap after pos[k]: the open arc to the next terminal. Pick the longest, ties to the smallest dropped edge.
  std::size_t best = 0;
  std::size_t best_gap = 0;
  EdgeIds best_edge{0, 0};
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const std::size_t next = pos[(k + 1) % pos.size()];
    const std::size_t gap = (next + len - pos[k]) % len;
    const EdgeIds first_edge = make_edge(cycle[pos[k]], cycle[(pos[k] + 1) % len]);
    if (gap > best_gap || (gap == best_gap && first_edge < best_edge)) {
      best_gap = gap;
      best = k;
      best_edge = first_edge;
    }
  }
  std::vector<VertexId> path;
  const std::size_t start = pos[(best + 1) % pos.size()];
  for (std::size_t step = 0; step <= len - best_gap; ++step) path.push_back(cycle[(start + step) % len]);
  return make_family(g, s, {Tree::from_path(path)}, {"AllInOneCluster", "cycle/drop_longest_gap"});
}

PlanResult plan_all_in_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts) {
  PlanResult res;
  const ClusterId c = g.cluster(s[0]);
  const auto small = shared_graph(g.n() - 1);
  std::vector<VertexId> reduced;
  for (VertexId v : s) reduced.push_back(small->id(reduce_to_cluster(g.vertex(v))));
  const STreeFamily inner = build_idsts(*small, reduced, opts);
  res.trace.push_back("all_in_one/recurse_into_cluster");
  for (const auto& label : inner.case_trace) res.trace.push_back("inner:" + label);
  std::vector<Tree> trees;
  for (const Tree& t : inner.trees) {
    std::vector<EdgeIds> edges;
    for (const auto& e : t.edges)
      edges.push_back(make_edge(g.id(lift_from_cluster(small->vertex(e.first), c)),
                                g.id(lift_from_cluster(small->vertex(e.second), c))));
    trees.push_back(Tree::from_edges(std::move(edges), s));
  }
  std::vector<VertexId> outs;
  for (VertexId v : s) outs.push_back(g.out(v));
  auto outside = subgraph(g, [&g, c](VertexId v) { return g.cluster(v) != c; });
  Tree t = terminal_tree(outside, outs);
  std::vector<EdgeIds> edges = t.edges;
  for (VertexId v : s) edges.push_back(make_edge(v, g.out(v)));
  trees.push_back(Tree::from_edges(std::move(edges), s));
  res.trace.push_back("all_in_one/outside_tree");
  res.trees = std::move(trees);
  return res;
}

PlanResult run_planner(CaseTag tag, const BurntPancakeGraph& g, const std::vector<VertexId>& s, int variant,
                       const BuildOptions& opts) {
  switch (tag) {
    case CaseTag::AllInOneCluster: return plan_all_in_one(g, s, opts);
    case CaseTag::ThreeOne: return detail::plan_three_one(g, s, variant);
    case CaseTag::TwoTwo: return detail::plan_two_two(g, s, variant);
    case CaseTag::TwoOneOne: return detail::plan_two_one_one(g, s, variant);
    case CaseTag::AllSeparate: return detail::plan_all_separate(g, s, variant);
  }
  throw std::logic_error("unknown case");
}

STreeFamily build_tagged(const BurntPancakeGraph& g, const std::vector<VertexId>& s, CaseTag tag,
                         const BuildOptions& opts) {
  const int want = g.n() - 1;
  STreeFamily first_candidate;
  bool have_candidate = false;
  VerificationReport first_report;
  const int variants = tag == CaseTag::AllInOneCluster ? 1 : std::max(1, opts.variants);
  for (int variant = 0; variant < variants; ++variant) {
    PlanResult res;
    try {
      res = run_planner(tag, g, s, variant, opts);
    } catch (const InfeasibleError&) {
      continue;
    }
    if (!res.trees) continue;
    std::vector<std::string> trace{to_string(tag)};
    trace.insert(trace.end(), res.trace.begin(), res.trace.end());
    if (variant > 0) trace.push_back("alternate_choice/" + std::to_string(variant));
    STreeFamily fam = make_family(g, s, std::move(*res.trees), std::move(trace));
    for (const auto& label : fam.case_trace)
      if (label.rfind("inner:", 0) == 0 && label.find("repair/") != std::string::npos) fam.repaired = true;
    VerificationReport report = verify_family(g, s, fam, want);
    if (report.ok) return fam;
    if (!have_candidate) {
      first_candidate = fam;
      first_report = report;
      have_candidate = true;
    }
  }
  if (!opts.allow_repair) throw ConstructionDefect("planner failed for " + to_string(tag) + " and repair is disabled");
  if (!have_candidate) {
    first_candidate = make_family(g, s, {}, {to_string(tag)});
    first_report = verify_family(g, s, first_candidate, want);
  }
  RepairOptions ro;
  ro.attempts = opts.repair_attempts;
  ro.seed = opts.seed;
  return repair(g, s, first_candidate, first_report, ro);
}

void require_tag(const BurntPancakeGraph& g, const std::vector<VertexId>& s, CaseTag tag) {
  if (classify(g, s) != tag) throw std::invalid_argument("terminal set is not of case " + to_string(tag));
}

}  // namespace

STreeFamily build_idsts(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts) {
  check_terminals(g, s, 4);
  if (g.n() == 2) return build_cycle(g, s);
  return build_tagged(g, s, classify(g, s), opts);
}

STreeFamily build_case_all_in_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts) {
  require_tag(g, s, CaseTag::AllInOneCluster);
  return build_idsts(g, s, opts);
}
STreeFamily build_case_three_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts) {
  require_tag(g, s, CaseTag::ThreeOne);
  return build_idsts(g, s, opts);
}
STreeFamily build_case_two_two(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts) {
  require_tag(g, s, CaseTag::TwoTwo);
  return build_idsts(g, s, opts);
}
STreeFamily build_case_two_one_one(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts) {
  require_tag(g, s, CaseTag::TwoOneOne);
  return build_idsts(g, s, opts);
}
STreeFamily build_case_all_separate(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const BuildOptions& opts) {
  require_tag(g, s, CaseTag::AllSeparate);
  return build_idsts(g, s, opts);
}

STreeFamily build_idsts_3(const BurntPancakeGraph& g, const std::vector<VertexId>& s3, const BuildOptions& opts) {
  check_terminals(g, s3, 3);
  const std::unordered_set<VertexId> taken(s3.begin(), s3.end());
  const int want = g.n() - 1;
  std::string last_error;
  // The extra terminal is the canonically smallest vertex outside s3; later
  // candidates are only tried if pruning ever leaves a shared vertex.
  for (VertexId extra = 0; extra < g.vertex_count(); ++extra) {
    if (taken.count(extra)) continue;
    std::vector<VertexId> s4 = s3;
    s4.push_back(extra);
    STreeFamily fam4 = build_idsts(g, s4, opts);
    STreeFamily fam;
    fam.n = g.n();
    fam.s = s3;
    fam.repaired = fam4.repaired;
    fam.case_trace = {"three_terminals/added_vertex"};
    fam.case_trace.insert(fam.case_trace.end(), fam4.case_trace.begin(), fam4.case_trace.end());
    for (const Tree& t : fam4.trees) fam.trees.push_back(prune_to(t, s3));
    const auto report = verify_family(g, s3, fam, want);
    if (report.ok) return fam;
    last_error = report.summary(g);
  }
  throw ConstructionDefect("no verified three-terminal family: " + last_error);
}

}  // namespace bpn
