#pragma once

#include <string>
#include <vector>

#include "bpn/graph.hpp"
#include "bpn/tree.hpp"

namespace bpn {

enum class ViolationKind { NotATree, MissingTerminal, VertexOverlap, EdgeOverlap, EdgeNotInGraph, WrongCount };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> trees;  // tree indices involved
  std::vector<VertexId> vertices;
  std::vector<EdgeIds> edges;
  std::string message;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
  std::string summary(const BurntPancakeGraph& g) const;
};

/// Connected, acyclic, |E| = |V| - 1, every edge in g.
VerificationReport verify_tree(const BurntPancakeGraph& g, const Tree& t);

/// verify_tree on each member, S in every tree, pairwise vertex intersections
/// exactly S, pairwise disjoint edges, and exactly expected_count trees.
VerificationReport verify_family(const BurntPancakeGraph& g, const std::vector<VertexId>& s, const STreeFamily& fam,
                                 int expected_count);

}  // namespace bpn
