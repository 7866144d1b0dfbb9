#include "bpn/io.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace bpn {

using nlohmann::json;

namespace {

json perm_json(const SignedPermutation& p) { return p.symbols(); }

json vertex_json(const BurntPancakeGraph& g, VertexId v) { return perm_json(g.vertex(v)); }

SignedPermutation perm_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("vertex must be an array of n symbols");
  std::vector<int> symbols;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("vertex symbols must be integers");
    symbols.push_back(x.get<int>());
  }
  try {
    return SignedPermutation(symbols);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad vertex: ") + e.what());
  }
}

std::string label(const BurntPancakeGraph& g, VertexId v) { return "\"" + to_string(g.vertex(v)) + "\""; }

}  // namespace

std::string family_to_json(const BurntPancakeGraph& g, const STreeFamily& fam, int indent) {
  json out;
  out["n"] = fam.n;
  json s = json::array();
  for (VertexId v : fam.s) s.push_back(vertex_json(g, v));
  out["s"] = s;
  json trees = json::array();
  for (const Tree& t : fam.trees) {
    json vs = json::array();
    for (VertexId v : t.vertices) vs.push_back(vertex_json(g, v));
    json es = json::array();
    for (const EdgeIds& e : t.edges) es.push_back(json::array({vertex_json(g, e.first), vertex_json(g, e.second)}));
    trees.push_back({{"vertices", vs}, {"edges", es}});
  }
  out["trees"] = trees;
  out["case_trace"] = fam.case_trace;
  out["repaired"] = fam.repaired;
  return out.dump(indent);
}

STreeFamily family_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("family document must be an object");
  for (const char* key : {"n", "s", "trees"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  if (!doc["n"].is_number_integer()) throw ParseError("'n' must be an integer");
  const int n = doc["n"].get<int>();
  std::shared_ptr<const BurntPancakeGraph> gp;
  try {
    gp = shared_graph(n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad n: ") + e.what());
  }
  const BurntPancakeGraph& g = *gp;
  STreeFamily fam;
  fam.n = n;
  if (!doc["s"].is_array()) throw ParseError("'s' must be an array");
  for (const auto& v : doc["s"]) fam.s.push_back(g.id(perm_from_json(v, n)));
  if (!doc["trees"].is_array()) throw ParseError("'trees' must be an array");
  for (const auto& t : doc["trees"]) {
    if (!t.is_object() || !t.contains("edges")) throw ParseError("tree must be an object with 'edges'");
    std::vector<EdgeIds> edges;
    for (const auto& e : t["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of vertices");
      edges.push_back(make_edge(g.id(perm_from_json(e[0], n)), g.id(perm_from_json(e[1], n))));
    }
    std::vector<VertexId> extra;
    if (t.contains("vertices")) {
      if (!t["vertices"].is_array()) throw ParseError("'vertices' must be an array");
      for (const auto& v : t["vertices"]) extra.push_back(g.id(perm_from_json(v, n)));
    }
    fam.trees.push_back(Tree::from_edges(std::move(edges), extra));
  }
  if (doc.contains("case_trace")) {
    if (!doc["case_trace"].is_array()) throw ParseError("'case_trace' must be an array");
    for (const auto& c : doc["case_trace"]) {
      if (!c.is_string()) throw ParseError("case_trace entries must be strings");
      fam.case_trace.push_back(c.get<std::string>());
    }
  }
  if (doc.contains("repaired")) {
    if (!doc["repaired"].is_boolean()) throw ParseError("'repaired' must be a boolean");
    fam.repaired = doc["repaired"].get<bool>();
  }
  return fam;
}

std::string graph_to_json(const BurntPancakeGraph& g, int indent) {
  json out;
  out["n"] = g.n();
  json vs = json::array();
  json es = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    vs.push_back(vertex_json(g, v));
    for (VertexId u : g.neighbours(v))
      if (v < u) es.push_back(json::array({v, u}));
  }
  out["vertices"] = vs;
  out["edges"] = es;
  return out.dump(indent);
}

std::string family_to_dot(const BurntPancakeGraph& g, const STreeFamily& fam) {
  static const char* colours[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::ostringstream os;
  os << "graph family {\n  node [shape=circle];\n";
  for (VertexId v : fam.s) os << "  " << label(g, v) << " [shape=doublecircle, style=filled, fillcolor=yellow];\n";
  for (std::size_t k = 0; k < fam.trees.size(); ++k) {
    const char* colour = colours[k % 8];
    os << "  subgraph cluster_tree" << k << " {\n    label=\"tree " << k << "\";\n    color=" << colour << ";\n";
    for (VertexId v : fam.trees[k].vertices) {
      if (std::find(fam.s.begin(), fam.s.end(), v) != fam.s.end()) continue;
      os << "    " << label(g, v) << ";\n";
    }
    for (const EdgeIds& e : fam.trees[k].edges)
      os << "    " << label(g, e.first) << " -- " << label(g, e.second) << " [color=" << colour << "];\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const BurntPancakeGraph& g) {
  std::ostringstream os;
  os << "graph bp" << g.n() << " {\n";
  for (int c = -g.n(); c <= g.n(); ++c) {
    if (c == 0) continue;
    os << "  subgraph \"cluster_" << c << "\" {\n    label=\"cluster " << c << "\";\n";
    for (VertexId v : g.cluster_members(c)) os << "    " << label(g, v) << ";\n";
    os << "  }\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbours(v))
      if (v < u) os << "  " << label(g, v) << " -- " << label(g, u) << ";\n";
  os << "}\n";
  return os.str();
}

std::string view_to_dot(const SubgraphView& h, const std::string& name) {
  const BurntPancakeGraph& g = h.graph();
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (VertexId v : h.vertices()) os << "  " << label(g, v) << ";\n";
  for (VertexId v : h.vertices())
    for (VertexId u : h.neighbours(v))
      if (v < u) os << "  " << label(g, v) << " -- " << label(g, u) << ";\n";
  os << "}\n";
  return os.str();
}

std::string oracle_to_json(const BurntPancakeGraph& g, const OracleResult& r, int indent) {
  json out;
  json s = json::array();
  for (VertexId v : r.s) s.push_back(vertex_json(g, v));
  out["s"] = s;
  out["max_idsts_found"] = r.max_idsts_found;
  out["exhausted"] = r.exhausted;
  out["expansions"] = r.expansions;
  out["certificate"] = json::parse(family_to_json(g, r.certificate, -1));
  return out.dump(indent);
}

std::string report_to_json(const BurntPancakeGraph& g, const VerificationReport& r, int indent) {
  json out;
  out["ok"] = r.ok;
  json vs = json::array();
  for (const Violation& v : r.violations) {
    json item;
    item["kind"] = to_string(v.kind);
    item["trees"] = v.trees;
    json verts = json::array();
    for (VertexId x : v.vertices) verts.push_back(vertex_json(g, x));
    item["vertices"] = verts;
    json edges = json::array();
    for (const EdgeIds& e : v.edges) edges.push_back(json::array({vertex_json(g, e.first), vertex_json(g, e.second)}));
    item["edges"] = edges;
    item["message"] = v.message;
    vs.push_back(item);
  }
  out["violations"] = vs;
  return out.dump(indent);
}

}  // namespace bpn
