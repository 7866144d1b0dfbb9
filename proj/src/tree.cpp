#include "bpn/tree.hpp"

#include <algorithm>

namespace bpn {

Tree Tree::from_edges(std::vector<EdgeIds> edges, const std::vector<VertexId>& extra) {
  Tree t;
  for (auto& e : edges) {
    e = make_edge(e.first, e.second);
    t.vertices.push_back(e.first);
    t.vertices.push_back(e.second);
  }
  t.vertices.insert(t.vertices.end(), extra.begin(), extra.end());
  std::sort(t.vertices.begin(), t.vertices.end());
  t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  t.edges = std::move(edges);
  return t;
}

Tree Tree::from_path(const std::vector<VertexId>& path) {
  std::vector<EdgeIds> edges;
  for (std::size_t k = 1; k < path.size(); ++k) edges.push_back(make_edge(path[k - 1], path[k]));
  return from_edges(std::move(edges), path);
}

bool Tree::has_vertex(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

}  // namespace bpn
