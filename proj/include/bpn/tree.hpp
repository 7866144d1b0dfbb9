#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bpn/graph.hpp"

namespace bpn {

/// A candidate tree: sorted vertex ids and sorted normalized edges.
struct Tree {
  std::vector<VertexId> vertices;
  std::vector<EdgeIds> edges;

  static Tree single(VertexId v) { return Tree{{v}, {}}; }
  /// Vertex set is the edge endpoints plus `extra`.
  static Tree from_edges(std::vector<EdgeIds> edges, const std::vector<VertexId>& extra = {});
  static Tree from_path(const std::vector<VertexId>& path);

  bool has_vertex(VertexId v) const;
  bool operator==(const Tree&) const = default;
};

/// Ordered trees over a common terminal set.
struct STreeFamily {
  int n = 0;
  std::vector<VertexId> s;
  std::vector<Tree> trees;
  std::vector<std::string> case_trace;
  bool repaired = false;
};

/// Thrown when a requested structure does not exist; carries the best count achieved.
class InfeasibleError : public std::runtime_error {
public:
  InfeasibleError(const std::string& what, int achievable) : std::runtime_error(what), achievable_(achievable) {}
  int achievable() const { return achievable_; }

private:
  int achievable_;
};

/// The builder could not produce a verified family. Indicates an implementation bug.
class ConstructionDefect : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace bpn
