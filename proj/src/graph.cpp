#include "bpn/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace bpn {

namespace {
constexpr int kMaterializeLimit = 5;
}

int default_max_n() {
  if (const char* env = std::getenv("BPN_MAX_N")) {
    try {
      int v = std::stoi(env);
      if (v >= 2 && v <= kMaxSymbols) return v;
    } catch (const std::exception&) {
    }
  }
  return 7;
}

BurntPancakeGraph::BurntPancakeGraph(int n) : BurntPancakeGraph(n, default_max_n()) {}

BurntPancakeGraph::BurntPancakeGraph(int n, int max_n) : n_(n) {
  if (n < 2) throw std::invalid_argument("BP_n requires n >= 2");
  if (n > max_n) throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the construction ceiling " + std::to_string(max_n));
  const std::uint64_t count = bpn::vertex_count(n);
  vertices_.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) vertices_.push_back(unrank(n, r));
  if (n <= kMaterializeLimit) {
    adjacency_.resize(count * n);
    for (VertexId v = 0; v < count; ++v) {
      VertexId* row = adjacency_.data() + static_cast<std::size_t>(v) * n;
      for (int i = 1; i <= n; ++i) row[i - 1] = static_cast<VertexId>(rank(vertices_[v].prefix_reversal(i)));
      std::sort(row, row + n);
    }
  }
}

VertexId BurntPancakeGraph::id(const SignedPermutation& x) const {
  if (x.size() != n_) throw std::invalid_argument("vertex " + to_string(x) + " is not in BP_" + std::to_string(n_));
  return static_cast<VertexId>(rank(x));
}

bool BurntPancakeGraph::contains(const SignedPermutation& x) const { return x.size() == n_; }

VertexId BurntPancakeGraph::flip(VertexId v, int i) const {
  return static_cast<VertexId>(rank(vertices_[v].prefix_reversal(i)));
}

VertexId BurntPancakeGraph::gamma(VertexId v, int i) const {
  return static_cast<VertexId>(rank(gamma_neighbour(vertices_[v], i)));
}

std::vector<VertexId> BurntPancakeGraph::neighbours(VertexId v) const {
  if (!adjacency_.empty()) {
    const VertexId* row = adjacency_.data() + static_cast<std::size_t>(v) * n_;
    return {row, row + n_};
  }
  std::vector<VertexId> out;
  out.reserve(n_);
  for (int i = 1; i <= n_; ++i) out.push_back(flip(v, i));
  std::sort(out.begin(), out.end());
  return out;
}

bool BurntPancakeGraph::adjacent(VertexId u, VertexId v) const { return flip_between(u, v) != 0; }

int BurntPancakeGraph::flip_between(VertexId u, VertexId v) const {
  const SignedPermutation& a = vertices_[u];
  const SignedPermutation& b = vertices_[v];
  // x(i) and x agree beyond position i and differ at position i.
  int i = n_;
  while (i >= 1 && a[i] == b[i]) --i;
  if (i == 0) return 0;
  return a.prefix_reversal(i) == b ? i : 0;
}

std::vector<VertexId> BurntPancakeGraph::cluster_members(ClusterId c) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].last() == c) out.push_back(v);
  return out;
}

std::shared_ptr<const BurntPancakeGraph> shared_graph(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const BurntPancakeGraph>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<const BurntPancakeGraph>(n);
  cache.emplace(n, g);
  return g;
}

std::vector<VertexId> SubgraphView::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for_each_neighbour(v, [&](VertexId u) { out.push_back(u); });
  return out;
}

std::vector<VertexId> SubgraphView::vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g_->vertex_count(); ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::size_t SubgraphView::vertex_count() const {
  if (!allowed_) return g_->vertex_count();
  std::size_t c = 0;
  for (VertexId v = 0; v < g_->vertex_count(); ++v) c += contains(v) ? 1 : 0;
  return c;
}

std::size_t SubgraphView::edge_count() const {
  std::size_t twice = 0;
  for (VertexId v = 0; v < g_->vertex_count(); ++v)
    if (contains(v)) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

int SubgraphView::degree(VertexId v) const {
  int d = 0;
  for_each_neighbour(v, [&](VertexId) { ++d; });
  return d;
}

bool SubgraphView::is_connected() const {
  std::vector<VertexId> verts = vertices();
  if (verts.empty()) return true;
  std::vector<char> seen(g_->vertex_count(), 0);
  std::vector<VertexId> stack{verts.front()};
  seen[verts.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for_each_neighbour(v, [&](VertexId u) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    });
  }
  return reached == verts.size();
}

SubgraphView subgraph(const BurntPancakeGraph& g, SubgraphView::Predicate allowed) {
  return SubgraphView(g, std::move(allowed));
}

SubgraphView cluster_view(const BurntPancakeGraph& g, ClusterId c) {
  return SubgraphView(g, [&g, c](VertexId v) { return g.cluster(v) == c; });
}

Automorphism normalize(const BurntPancakeGraph& g, const SignedPermutation& anchor) {
  if (anchor.size() != g.n()) throw std::invalid_argument("normalize: anchor is not a vertex of this graph");
  return Automorphism{anchor.inverse(), anchor};
}

SignedPermutation reduce_to_cluster(const SignedPermutation& x) {
  const int n = x.size();
  if (n < 2) throw std::invalid_argument("reduce_to_cluster: n must be at least 2");
  const int dropped = std::abs(x.last());
  std::vector<int> symbols;
  symbols.reserve(n - 1);
  for (int p = 1; p < n; ++p) {
    const int s = x[p];
    const int m = std::abs(s);
    const int r = m > dropped ? m - 1 : m;
    symbols.push_back(s < 0 ? -r : r);
  }
  return SignedPermutation(symbols);
}

SignedPermutation lift_from_cluster(const SignedPermutation& y, ClusterId c) {
  const int dropped = std::abs(c);
  std::vector<int> symbols;
  symbols.reserve(y.size() + 1);
  for (int p = 1; p <= y.size(); ++p) {
    const int s = y[p];
    const int m = std::abs(s);
    const int r = m >= dropped ? m + 1 : m;
    symbols.push_back(s < 0 ? -r : r);
  }
  symbols.push_back(c);
  return SignedPermutation(symbols);
}

}  // namespace bpn
