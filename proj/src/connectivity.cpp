#include "bpn/connectivity.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bpn {

namespace {

constexpr int kUnbounded = INT_MAX / 4;

// Vertex-split flow network over the vertices of a view. Arcs are scanned in
// insertion order, which follows canonical vertex order.
class SplitNetwork {
public:
  explicit SplitNetwork(const SubgraphView& h) : h_(h), verts_(h.vertices()) {
    local_.reserve(verts_.size() * 2);
    for (std::size_t k = 0; k < verts_.size(); ++k) local_.emplace(verts_[k], static_cast<int>(k));
    const int nodes = static_cast<int>(verts_.size()) * 2 + 2;
    adj_.resize(nodes);
    source_ = nodes - 2;
    sink_ = nodes - 1;
  }

  int local(VertexId v) const {
    auto it = local_.find(v);
    if (it == local_.end()) throw std::invalid_argument("vertex " + to_string(h_.graph().vertex(v)) + " is not in the view");
    return it->second;
  }
  int in(VertexId v) const { return 2 * local(v); }
  int out(VertexId v) const { return 2 * local(v) + 1; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  // Unbounded sources get no incoming edge arcs and unbounded sinks no outgoing
  // ones, so no flow cycles pass through them.
  void build(const std::vector<VertexId>& unbounded_sources, const std::vector<VertexId>& unbounded_sinks,
             const std::vector<VertexId>& first_hops) {
    std::vector<char> is_src(verts_.size(), 0), is_snk(verts_.size(), 0);
    for (VertexId v : unbounded_sources) is_src[local(v)] = 1;
    for (VertexId v : unbounded_sinks) is_snk[local(v)] = 1;
    std::vector<char> hop_ok;
    if (!first_hops.empty()) {
      hop_ok.assign(verts_.size(), 0);
      for (VertexId v : first_hops)
        if (local_.count(v)) hop_ok[local(v)] = 1;
    }
    for (std::size_t k = 0; k < verts_.size(); ++k) {
      const int lk = static_cast<int>(k);
      add_arc(2 * lk, 2 * lk + 1, (is_src[k] || is_snk[k]) ? kUnbounded : 1);
    }
    for (std::size_t k = 0; k < verts_.size(); ++k) {
      if (is_snk[k]) continue;
      const int lk = static_cast<int>(k);
      h_.for_each_neighbour(verts_[k], [&](VertexId u) {
        const int lu = local(u);
        if (is_src[lu]) return;
        if (is_src[k] && !hop_ok.empty() && !hop_ok[lu]) return;
        add_arc(2 * lk + 1, 2 * lu, 1);
      });
    }
  }

  void add_arc(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  bool augment() {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(source_);
    seen[source_] = 1;
    while (!q.empty() && !seen[sink_]) {
      const int node = q.front();
      q.pop();
      for (int a : adj_[node]) {
        if (arcs_[a].cap <= 0 || seen[arcs_[a].to]) continue;
        seen[arcs_[a].to] = 1;
        via[arcs_[a].to] = a;
        q.push(arcs_[a].to);
      }
    }
    if (!seen[sink_]) return false;
    for (int node = sink_; node != source_;) {
      const int a = via[node];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      node = arcs_[a ^ 1].to;
    }
    return true;
  }

  int run(int limit) {
    int flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  // Split the flow into source-to-sink paths of graph vertices.
  std::vector<std::vector<VertexId>> decompose() {
    std::vector<int> remaining(arcs_.size(), 0);
    for (std::size_t a = 0; a < arcs_.size(); a += 2) remaining[a] = arcs_[a].original - arcs_[a].cap;
    std::vector<std::vector<VertexId>> paths;
    for (int a : adj_[source_]) {
      if (a % 2 != 0) continue;
      while (remaining[a] > 0) {
        --remaining[a];
        std::vector<VertexId> path;
        int node = arcs_[a].to;
        while (node != sink_) {
          if (node % 2 == 0) path.push_back(verts_[node / 2]);
          int next = -1;
          for (int b : adj_[node])
            if (b % 2 == 0 && remaining[b] > 0) {
              next = b;
              break;
            }
          if (next == -1) throw std::logic_error("flow decomposition lost its way");
          --remaining[next];
          node = arcs_[next].to;
        }
        paths.push_back(std::move(path));
      }
    }
    return paths;
  }

private:
  struct Arc {
    int to;
    int cap;
    int original;
  };

  const SubgraphView& h_;
  std::vector<VertexId> verts_;
  std::unordered_map<VertexId, int> local_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  int source_ = 0;
  int sink_ = 0;
};

void require_in_view(const SubgraphView& h, VertexId v, const char* what) {
  if (!h.contains(v)) throw std::invalid_argument(std::string(what) + ": vertex not in view");
}

}  // namespace

PathFamily disjoint_paths(const SubgraphView& h, VertexId x, VertexId y, int k) {
  require_in_view(h, x, "disjoint_paths");
  require_in_view(h, y, "disjoint_paths");
  if (x == y) throw std::invalid_argument("disjoint_paths: endpoints must differ");
  SplitNetwork net(h);
  net.build({x}, {y}, {});
  net.add_arc(net.source(), net.in(x), kUnbounded);
  net.add_arc(net.out(y), net.sink(), kUnbounded);
  const int got = net.run(k);
  if (got < k) {
    const int best = got + net.run(kUnbounded);
    throw InfeasibleError("only " + std::to_string(best) + " internally disjoint paths exist", best);
  }
  PathFamily fam{PathKind::PairPaths, net.decompose()};
  std::sort(fam.paths.begin(), fam.paths.end(), [](const auto& a, const auto& b) { return a[1] < b[1]; });
  return fam;
}

PathFamily fan(const SubgraphView& h, VertexId x, const std::vector<VertexId>& targets, int k, const FanPins& pins) {
  require_in_view(h, x, "fan");
  for (VertexId t : targets) {
    require_in_view(h, t, "fan");
    if (t == x) throw std::invalid_argument("fan: origin cannot be a target");
  }
  for (VertexId t : pins.required_targets)
    if (std::find(targets.begin(), targets.end(), t) == targets.end())
      throw std::invalid_argument("fan: required target is not a target");
  const int required = static_cast<int>(pins.required_targets.size());
  if (required > k) throw std::invalid_argument("fan: more required targets than paths");

  SplitNetwork net(h);
  net.build({x}, {}, pins.first_hops);
  net.add_arc(net.source(), net.in(x), kUnbounded);
  for (VertexId t : pins.required_targets) net.add_arc(net.out(t), net.sink(), 1);
  int got = net.run(required);
  if (got < required) throw InfeasibleError("fan cannot reach every required target", got);
  // Used sink arcs are never undone by later augmentations.
  for (VertexId t : targets)
    if (std::find(pins.required_targets.begin(), pins.required_targets.end(), t) == pins.required_targets.end())
      net.add_arc(net.out(t), net.sink(), 1);
  got += net.run(k - got);
  if (got < k) {
    const int best = got + net.run(kUnbounded);
    throw InfeasibleError("only a " + std::to_string(best) + "-fan exists", best);
  }
  PathFamily fam{PathKind::Fan, net.decompose()};
  auto pos = [&](const std::vector<VertexId>& p) { return std::find(targets.begin(), targets.end(), p.back()) - targets.begin(); };
  std::sort(fam.paths.begin(), fam.paths.end(), [&](const auto& a, const auto& b) { return pos(a) < pos(b); });
  return fam;
}

PathFamily set_to_set_paths(const SubgraphView& h, const std::vector<VertexId>& xs, const std::vector<VertexId>& ys,
                            int k) {
  for (VertexId v : xs) require_in_view(h, v, "set_to_set_paths");
  for (VertexId v : ys) require_in_view(h, v, "set_to_set_paths");
  SplitNetwork net(h);
  net.build({}, {}, {});
  for (VertexId v : xs) net.add_arc(net.source(), net.in(v), 1);
  for (VertexId v : ys) net.add_arc(net.out(v), net.sink(), 1);
  const int got = net.run(k);
  if (got < k) {
    const int best = got + net.run(kUnbounded);
    throw InfeasibleError("only " + std::to_string(best) + " disjoint set-to-set paths exist", best);
  }
  PathFamily fam{PathKind::SetToSet, net.decompose()};
  auto pos = [&](const std::vector<VertexId>& p) { return std::find(xs.begin(), xs.end(), p.front()) - xs.begin(); };
  std::sort(fam.paths.begin(), fam.paths.end(), [&](const auto& a, const auto& b) { return pos(a) < pos(b); });
  return fam;
}

Tree terminal_tree(const SubgraphView& h, const std::vector<VertexId>& terminals) {
  if (terminals.empty()) throw std::invalid_argument("terminal_tree: no terminals");
  for (VertexId v : terminals) require_in_view(h, v, "terminal_tree");
  std::unordered_map<VertexId, VertexId> parent;
  std::vector<VertexId> tree_vertices{terminals.front()};
  std::vector<EdgeIds> edges;
  std::unordered_map<VertexId, char> in_tree{{terminals.front(), 1}};
  for (std::size_t k = 1; k < terminals.size(); ++k) {
    const VertexId target = terminals[k];
    if (in_tree.count(target)) continue;
    // BFS from the target back to the partial tree; ties resolved by canonical order.
    parent.clear();
    parent.emplace(target, target);
    std::queue<VertexId> q;
    q.push(target);
    VertexId hit = target;
    bool found = false;
    while (!q.empty() && !found) {
      const VertexId v = q.front();
      q.pop();
      h.for_each_neighbour(v, [&](VertexId u) {
        if (found || parent.count(u)) return;
        parent.emplace(u, v);
        if (in_tree.count(u)) {
          hit = u;
          found = true;
          return;
        }
        q.push(u);
      });
    }
    if (!found) throw InfeasibleError("terminals are not connected in the view", 0);
    for (VertexId v = hit; v != target;) {
      const VertexId p = parent.at(v);
      edges.push_back(make_edge(v, p));
      in_tree.emplace(p, 1);
      tree_vertices.push_back(p);
      v = p;
    }
  }
  return Tree::from_edges(std::move(edges), tree_vertices);
}

int min_vertex_cut(const SubgraphView& h, VertexId x, VertexId y) {
  require_in_view(h, x, "min_vertex_cut");
  require_in_view(h, y, "min_vertex_cut");
  if (x == y) throw std::invalid_argument("min_vertex_cut: endpoints must differ");
  SplitNetwork net(h);
  net.build({x}, {y}, {});
  net.add_arc(net.source(), net.in(x), kUnbounded);
  net.add_arc(net.out(y), net.sink(), kUnbounded);
  return net.run(kUnbounded);
}

}  // namespace bpn
