#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bpn/graph.hpp"
#include "bpn/oracle.hpp"
#include "bpn/tree.hpp"
#include "bpn/verifier.hpp"

namespace bpn {

/// Malformed input document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Family JSON: {"n", "s", "trees": [{"vertices", "edges"}], "case_trace", "repaired"},
/// vertices written as signed-integer arrays. Output is deterministic.
std::string family_to_json(const BurntPancakeGraph& g, const STreeFamily& fam, int indent = 2);

/// Parses family JSON; the graph is BP_n for the declared n.
STreeFamily family_from_json(const std::string& text);

/// {"n", "vertices": [[..]..] in id order, "edges": [[id, id]..]}.
std::string graph_to_json(const BurntPancakeGraph& g, int indent = -1);

/// One DOT subgraph per tree; terminals drawn as filled double circles.
std::string family_to_dot(const BurntPancakeGraph& g, const STreeFamily& fam);

/// Whole graph, clusters as DOT subgraphs.
std::string graph_to_dot(const BurntPancakeGraph& g);

/// The vertices and edges of a view, labelled by their signed sequences.
std::string view_to_dot(const SubgraphView& h, const std::string& name = "view");

std::string oracle_to_json(const BurntPancakeGraph& g, const OracleResult& r, int indent = 2);

std::string report_to_json(const BurntPancakeGraph& g, const VerificationReport& r, int indent = 2);

}  // namespace bpn
