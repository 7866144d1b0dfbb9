#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bpn/builder.hpp"
#include "bpn/graph.hpp"
#include "bpn/io.hpp"
#include "bpn/oracle.hpp"
#include "bpn/properties.hpp"
#include "bpn/sweep.hpp"
#include "bpn/verifier.hpp"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kDefect = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  std::vector<std::string> s;
  int k = 4;
  std::string mode = "sample";
  std::size_t count = 0;
  std::uint64_t seed = 42;
  int jobs = 1;
  bool fail_fast = false;
  std::string format = "json";
  std::uint64_t budget = 50'000'000;
  int target = -1;
  std::string out;
  std::string file;
  std::optional<int> cluster;
};

std::shared_ptr<const bpn::BurntPancakeGraph> graph_for(int n) {
  try {
    return bpn::shared_graph(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<bpn::VertexId> parse_set(const bpn::BurntPancakeGraph& g, const std::vector<std::string>& texts) {
  std::vector<bpn::VertexId> s;
  for (const std::string& t : texts) {
    bpn::SignedPermutation p;
    try {
      p = bpn::parse_vertex(t);
    } catch (const std::invalid_argument& e) {
      throw UsageError("cannot parse vertex '" + t + "': " + e.what());
    }
    if (p.size() != g.n()) throw UsageError("vertex '" + t + "' does not have " + std::to_string(g.n()) + " symbols");
    const bpn::VertexId v = g.id(p);
    if (std::find(s.begin(), s.end(), v) != s.end()) throw UsageError("duplicate vertex '" + t + "'");
    s.push_back(v);
  }
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int cmd_props(const Options& o) {
  const auto gp = graph_for(o.n);
  const bpn::BurntPancakeGraph& g = *gp;
  const std::size_t samples = o.count == 0 ? 500 : o.count;
  nlohmann::json report;
  report["n"] = g.n();
  report["vertices"] = g.vertex_count();
  std::uint64_t edges = 0;
  for (bpn::VertexId v = 0; v < g.vertex_count(); ++v) edges += g.neighbours(v).size();
  report["edges"] = edges / 2;
  bool all = true;
  nlohmann::json checks = nlohmann::json::array();
  const auto add = [&](const std::string& name, const bpn::CheckReport& r, const std::string& note = "") {
    nlohmann::json c{{"name", name}, {"ok", r.ok}, {"cases", r.cases}};
    if (!r.detail.empty()) c["detail"] = r.detail;
    if (!note.empty()) c["note"] = note;
    checks.push_back(c);
    all = all && r.ok;
  };
  add("counts_and_regularity", bpn::check_counts(g));
  const int gi = bpn::girth(g);
  report["girth"] = gi;
  add("girth", gi == 8 ? bpn::CheckReport{} : bpn::CheckReport::fail("girth " + std::to_string(gi) + ", expected 8"));
  add("cross_edge_counts", bpn::check_cross_edge_counts(g));
  add("out_neighbour_facts", bpn::check_out_neighbour_facts(g));
  if (g.n() >= 3) {
    add("flip_crossing", bpn::check_flip_crossing(g));
    const std::size_t removal_samples = g.n() == 3 ? 0 : std::min<std::size_t>(samples, 200);
    add("cluster_pair_removal", bpn::check_cluster_pair_removal(g, removal_samples, o.seed),
        removal_samples == 0 ? "exhaustive" : "sampled");
    add("cluster_isomorphism", bpn::check_cluster_isomorphism(g));
  }
  const std::size_t pair_samples = g.n() <= 3 ? 0 : samples;
  const bpn::ConnectivitySample c = bpn::local_connectivity_min(g, pair_samples, o.seed);
  report["connectivity_min"] = c.minimum;
  report["connectivity_pairs"] = c.pairs;
  add("vertex_connectivity",
      c.minimum == g.n() ? bpn::CheckReport{true, "", c.pairs}
                         : bpn::CheckReport::fail("minimum " + std::to_string(c.minimum) + " disjoint paths", c.pairs),
      pair_samples == 0 ? "exhaustive" : "sampled");
  report["checks"] = checks;
  report["ok"] = all;
  emit(o, report.dump(2));
  return all ? kOk : kCheckFailed;
}

int cmd_trees(const Options& o) {
  const auto gp = graph_for(o.n);
  const bpn::BurntPancakeGraph& g = *gp;
  if (o.s.size() != 4 && o.s.size() != 3) throw UsageError("trees needs 3 or 4 vertices via --s");
  const auto s = parse_set(g, o.s);
  if (o.format != "json" && o.format != "dot") throw UsageError("unknown format " + o.format);
  bpn::STreeFamily fam;
  try {
    fam = s.size() == 4 ? bpn::build_idsts(g, s) : bpn::build_idsts_3(g, s);
  } catch (const bpn::ConstructionDefect& e) {
    std::cerr << "defect: " << e.what() << '\n';
    return kDefect;
  }
  const bpn::VerificationReport rep = bpn::verify_family(g, s, fam, g.n() - 1);
  if (!rep.ok) {
    std::cerr << rep.summary(g) << '\n';
    return kDefect;
  }
  emit(o, o.format == "dot" ? bpn::family_to_dot(g, fam) : bpn::family_to_json(g, fam));
  return kOk;
}

int cmd_verify(const Options& o) {
  std::ifstream f(o.file, std::ios::binary);
  if (!f) throw UsageError("cannot read " + o.file);
  std::stringstream buf;
  buf << f.rdbuf();
  bpn::STreeFamily fam;
  try {
    fam = bpn::family_from_json(buf.str());
  } catch (const bpn::ParseError& e) {
    throw UsageError(e.what());
  }
  const auto gp = graph_for(fam.n);
  const bpn::BurntPancakeGraph& g = *gp;
  const bpn::VerificationReport rep = bpn::verify_family(g, fam.s, fam, g.n() - 1);
  emit(o, bpn::report_to_json(g, rep));
  return rep.ok ? kOk : kCheckFailed;
}

int cmd_sweep(const Options& o) {
  const auto gp = graph_for(o.n);
  bpn::SweepConfig cfg;
  cfg.n = o.n;
  cfg.k = o.k;
  if (o.mode == "exhaustive")
    cfg.mode = bpn::SweepMode::Exhaustive;
  else if (o.mode == "sample")
    cfg.mode = bpn::SweepMode::Sample;
  else
    throw UsageError("mode must be exhaustive or sample");
  cfg.sample_size = o.count == 0 ? 1000 : o.count;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.fail_fast = o.fail_fast;
  bpn::SweepSummary sum;
  try {
    sum = bpn::run_sweep(*gp, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(o, bpn::summary_to_json(*gp, cfg, sum));
  std::cerr << "sweep: " << sum.verified << "/" << sum.total << " verified in " << sum.seconds << " s\n";
  for (const auto& f : sum.failures) {
    std::cerr << "failed:";
    for (bpn::VertexId v : f.s) std::cerr << " [" << bpn::to_string(gp->vertex(v)) << "]";
    std::cerr << " " << f.reason << '\n';
  }
  return sum.ok() ? kOk : kCheckFailed;
}

int cmd_oracle(const Options& o) {
  const auto gp = graph_for(o.n);
  const bpn::BurntPancakeGraph& g = *gp;
  if (o.s.size() < 2) throw UsageError("oracle needs at least two vertices via --s");
  const auto s = parse_set(g, o.s);
  const int target = o.target < 0 ? g.n() - 1 : o.target;
  if (target > 31) throw UsageError("target too large");
  const bpn::OracleResult r = bpn::max_idsts_bruteforce(g, s, target, o.budget);
  emit(o, bpn::oracle_to_json(g, r));
  return kOk;
}

int cmd_export(const Options& o) {
  const auto gp = graph_for(o.n);
  const bpn::BurntPancakeGraph& g = *gp;
  if (o.cluster) {
    const int c = *o.cluster;
    if (c == 0 || std::abs(c) > g.n()) throw UsageError("cluster must be a nonzero symbol in [-n, n]");
    const bpn::SubgraphView view = bpn::cluster_view(g, c);
    if (o.format == "dot") {
      emit(o, bpn::view_to_dot(view, "cluster " + std::to_string(c)));
      return kOk;
    }
    if (o.format != "json") throw UsageError("unknown format " + o.format);
    nlohmann::json out;
    out["n"] = g.n();
    out["cluster"] = c;
    nlohmann::json vs = nlohmann::json::array();
    nlohmann::json es = nlohmann::json::array();
    for (bpn::VertexId v : view.vertices()) {
      vs.push_back(g.vertex(v).symbols());
      for (bpn::VertexId u : view.neighbours(v))
        if (v < u) es.push_back(nlohmann::json::array({v, u}));
    }
    out["vertices"] = vs;
    out["edges"] = es;
    emit(o, out.dump());
    return kOk;
  }
  if (o.format == "dot") {
    emit(o, bpn::graph_to_dot(g));
    return kOk;
  }
  if (o.format != "json") throw UsageError("unknown format " + o.format);
  emit(o, bpn::graph_to_json(g));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnt pancake graph toolkit: S-tree families, verification, sweeps, oracle"};
  app.require_subcommand(1);
  Options o;

  const auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "dimension of BP_n")->required(); };
  const auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "write output to this file"); };

  auto* props = app.add_subcommand("props", "structural property checks");
  add_n(props);
  props->add_option("--count", o.count, "sample size for sampled checks (default 500)");
  props->add_option("--seed", o.seed, "sampling seed");
  add_out(props);

  auto* trees = app.add_subcommand("trees", "build and verify n-1 S-trees");
  add_n(trees);
  trees->add_option("--s", o.s, "terminal vertex, e.g. \"1,-2,3\" (3 or 4 of them)")->required()->allow_extra_args();
  trees->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  add_out(trees);

  auto* verify = app.add_subcommand("verify", "re-verify a family JSON file");
  verify->add_option("file", o.file, "family JSON")->required();
  add_out(verify);

  auto* sweep = app.add_subcommand("sweep", "build and verify over many terminal sets");
  add_n(sweep);
  sweep->add_option("--k", o.k, "terminal set size (3 or 4)");
  sweep->add_option("--mode", o.mode, "exhaustive or sample");
  sweep->add_option("--count", o.count, "sample size (default 1000)");
  sweep->add_option("--seed", o.seed, "sampling seed");
  sweep->add_option("--jobs", o.jobs, "worker threads");
  sweep->add_flag("--fail-fast", o.fail_fast, "stop at the first failure");
  add_out(sweep);

  auto* oracle = app.add_subcommand("oracle", "exhaustive search for the largest family");
  add_n(oracle);
  oracle->add_option("--s", o.s, "terminal vertex (repeatable)")->required()->allow_extra_args();
  oracle->add_option("--target", o.target, "stop once this many trees are found (default n-1)");
  oracle->add_option("--budget", o.budget, "search node budget");
  add_out(oracle);

  auto* exp = app.add_subcommand("export", "write the graph or one cluster as JSON or DOT");
  add_n(exp);
  exp->add_option("--format", o.format, "json or dot");
  exp->add_option("--cluster", o.cluster, "export only this cluster");
  add_out(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (props->parsed()) return cmd_props(o);
    if (trees->parsed()) return cmd_trees(o);
    if (verify->parsed()) return cmd_verify(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (exp->parsed()) return cmd_export(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const bpn::ConstructionDefect& e) {
    std::cerr << "defect: " << e.what() << '\n';
    return kDefect;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
