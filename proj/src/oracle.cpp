#include "bpn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace bpn {

namespace {

// Internally disjoint S-trees only compete for edges between two terminals;
// every other edge belongs to whichever tree owns its non-terminal end. With
// terminal-terminal edges subdivided, k trees exist iff the non-terminal
// vertices can be split into k classes that each connect S.
struct Aux {
  std::vector<std::vector<int>> adj;
  std::vector<char> terminal;
  std::vector<EdgeIds> pseudo;  // original edge behind each subdivision vertex
  int original = 0;
};

Aux make_aux(const BurntPancakeGraph& g, const std::vector<VertexId>& s) {
  Aux a;
  a.original = static_cast<int>(g.vertex_count());
  a.adj.resize(a.original);
  a.terminal.assign(a.original, 0);
  for (VertexId v : s) a.terminal[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbours(v)) {
      if (u < v) continue;
      if (a.terminal[u] && a.terminal[v]) {
        const int p = static_cast<int>(a.adj.size());
        a.adj.push_back({static_cast<int>(v), static_cast<int>(u)});
        a.terminal.push_back(0);
        a.pseudo.push_back(make_edge(u, v));
        a.adj[v].push_back(p);
        a.adj[u].push_back(p);
      } else {
        a.adj[v].push_back(static_cast<int>(u));
        a.adj[u].push_back(static_cast<int>(v));
      }
    }
  return a;
}

struct State {
  std::vector<int> assigned;        // class, or -1
  std::vector<std::uint32_t> mask;  // classes an unassigned vertex may still join
  std::uint32_t pristine = 0;       // interchangeable empty classes
};

class ClassSearch {
public:
  ClassSearch(const Aux& aux, const std::vector<VertexId>& s, int k, std::uint64_t budget)
      : a_(aux), s_(s), k_(k), budget_(budget) {}

  bool run() {
    State st;
    const std::size_t nv = a_.adj.size();
    st.assigned.assign(nv, -1);
    st.mask.assign(nv, k_ >= 32 ? ~0u : (1u << k_) - 1);
    st.pristine = st.mask[0];
    return search(std::move(st));
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const State& solution() const { return solution_; }

private:
  bool usable(const State& st, int v, int j) const {
    if (a_.terminal[v]) return true;
    return st.assigned[v] == j || (st.assigned[v] < 0 && ((st.mask[v] >> j) & 1u));
  }

  bool committed(const State& st, int v, int j) const { return a_.terminal[v] || st.assigned[v] == j; }

  void assign(State& st, int v, int j) const {
    st.assigned[v] = j;
    st.mask[v] = 1u << j;
    st.pristine &= ~(1u << j);
  }

  // Class j reaches every terminal, treating terminals that cannot spare a
  // second neighbour for j as leaves. `removed` is left out of the class.
  bool class_feasible(const State& st, int j, const std::vector<char>& leaf, int removed) {
    int root = -1;
    for (VertexId t : s_)
      if (!leaf[t]) {
        root = static_cast<int>(t);
        break;
      }
    if (root >= 0) return reaches_all(st, j, leaf, removed, root);
    // Every terminal is a leaf: s0 hangs off one of its neighbours.
    for (int u : a_.adj[s_[0]])
      if (u != removed && usable(st, u, j) && reaches_all(st, j, leaf, removed, u)) return true;
    return false;
  }

  bool reaches_all(const State& st, int j, const std::vector<char>& leaf, int removed, int start) {
    const std::size_t nv = a_.adj.size();
    if (mark_.size() != nv) mark_.assign(nv, 0);
    ++stamp_;
    std::vector<int>& stack = scratch_;
    stack.assign(1, start);
    mark_[start] = stamp_;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : a_.adj[v]) {
        if (u == removed || mark_[u] == stamp_ || !usable(st, u, j)) continue;
        if (a_.terminal[u] && leaf[u]) continue;
        mark_[u] = stamp_;
        stack.push_back(u);
      }
    }
    for (VertexId t : s_) {
      if (!leaf[t]) {
        if (mark_[t] != stamp_) return false;
        continue;
      }
      bool touched = false;
      for (int u : a_.adj[t]) touched = touched || (u != removed && mark_[u] == stamp_);
      if (!touched) return false;
    }
    return true;
  }

  // Unassigned vertices class j cannot do without. Returns false if j is
  // infeasible already.
  bool critical(const State& st, int j, std::vector<int>& out) {
    std::vector<char> leaf(a_.adj.size(), 0);
    for (VertexId t : s_) leaf[t] = !matchable(st, t, -1, -1, j);
    if (!class_feasible(st, j, leaf, -1)) return false;
    for (std::size_t v = 0; v < a_.adj.size(); ++v) {
      if (a_.terminal[v] || st.assigned[v] >= 0 || !usable(st, static_cast<int>(v), j)) continue;
      if (!class_feasible(st, j, leaf, static_cast<int>(v))) out.push_back(static_cast<int>(v));
    }
    return true;
  }

  // Each class meets every terminal through its own neighbour of it, so the
  // classes must match into the terminal's neighbourhood. `fixed` pins one
  // neighbour slot to one class.
  bool matchable(const State& st, VertexId t, int fixed_slot, int fixed_class, int doubled = -1) const {
    const auto& nb = a_.adj[t];
    std::vector<int> match_of(nb.size(), -1);
    if (fixed_slot >= 0) match_of[fixed_slot] = fixed_class;
    std::vector<int> wanted;
    for (int j = 0; j < k_; ++j) {
      if (j != fixed_class) wanted.push_back(j);
      if (j == doubled) wanted.push_back(j);
    }
    for (int j : wanted) {
      std::vector<char> tried(nb.size(), 0);
      if (fixed_slot >= 0) tried[fixed_slot] = 1;
      const std::function<bool(int)> try_class = [&](int c) {
        for (std::size_t x = 0; x < nb.size(); ++x) {
          if (tried[x] || !usable(st, nb[x], c)) continue;
          tried[x] = 1;
          if (match_of[x] < 0 || try_class(match_of[x])) {
            match_of[x] = c;
            return true;
          }
        }
        return false;
      };
      if (!try_class(j)) return false;
    }
    return true;
  }

  // Drops classes from terminal neighbours that no full matching can use.
  bool prune_neighbourhoods(State& st, bool& changed) const {
    for (VertexId t : s_) {
      if (!matchable(st, t, -1, -1)) return false;
      const auto& nb = a_.adj[t];
      for (std::size_t x = 0; x < nb.size(); ++x) {
        const int v = nb[x];
        if (a_.terminal[v] || st.assigned[v] >= 0) continue;
        for (int c = 0; c < k_; ++c) {
          if (!((st.mask[v] >> c) & 1u) || matchable(st, t, static_cast<int>(x), c)) continue;
          st.mask[v] &= ~(1u << c);  // identical for all pristine classes, so they stay interchangeable
          changed = true;
        }
      }
    }
    return true;
  }

  bool propagate(State& st) {
    for (bool changed = true; changed;) {
      changed = false;
      if (!prune_neighbourhoods(st, changed)) return false;
      for (int j = 0; j < k_; ++j) {
        std::vector<int> forced;
        if (!critical(st, j, forced)) return false;
        for (int v : forced) {
          if (st.assigned[v] >= 0) {
            if (st.assigned[v] != j) return false;
            continue;
          }
          assign(st, v, j);
          changed = true;
        }
      }
    }
    return true;
  }

  // Component of s0 among vertices committed to class j.
  std::vector<char> committed_component(const State& st, int j) const {
    std::vector<char> in(a_.adj.size(), 0);
    std::vector<int> stack{static_cast<int>(s_[0])};
    in[s_[0]] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : a_.adj[v])
        if (!in[u] && committed(st, u, j)) {
          in[u] = 1;
          stack.push_back(u);
        }
    }
    return in;
  }

  bool search(State st) {
    if (aborted_) return false;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (!propagate(st)) return false;
    int j = -1;
    std::vector<char> comp;
    for (int c = 0; c < k_ && j < 0; ++c) {
      comp = committed_component(st, c);
      for (VertexId t : s_)
        if (!comp[t]) {
          j = c;
          break;
        }
    }
    if (j < 0) {
      solution_ = std::move(st);
      return true;
    }
    const int v = pick(st, j, comp);
    State with = st;
    assign(with, v, j);
    if (search(std::move(with))) return true;
    if (aborted_) return false;
    // v outside class j; any other pristine class would be a relabelling.
    const std::uint32_t drop = (st.pristine >> j) & 1u ? st.pristine : (1u << j);
    st.mask[v] &= ~drop;
    if (!((st.pristine >> j) & 1u)) st.pristine &= ~(1u << j);
    return search(std::move(st));
  }

  // Unassigned neighbour of the s0 component closest to a terminal it still misses.
  int pick(const State& st, int j, const std::vector<char>& comp) const {
    const std::size_t nv = a_.adj.size();
    std::vector<int> dist(nv, -1);
    std::queue<int> q;
    for (VertexId t : s_)
      if (!comp[t]) {
        dist[t] = 0;
        q.push(static_cast<int>(t));
      }
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : a_.adj[v])
        if (dist[u] < 0 && !comp[u] && usable(st, u, j)) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    int best = -1;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!comp[v]) continue;
      for (int u : a_.adj[v]) {
        if (comp[u] || st.assigned[u] >= 0 || !usable(st, u, j) || dist[u] < 0) continue;
        if (best < 0 || dist[u] < dist[best] || (dist[u] == dist[best] && u < best)) best = u;
      }
    }
    if (best < 0) throw std::logic_error("oracle: propagation left class without frontier");
    return best;
  }

  const Aux& a_;
  const std::vector<VertexId>& s_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  State solution_;
  std::vector<std::uint32_t> mark_;
  std::vector<int> scratch_;
  std::uint32_t stamp_ = 0;
};

// Spanning tree of the class, pruned to terminal leaves, in original edges.
Tree class_tree(const Aux& a, const std::vector<VertexId>& s, const std::function<bool(int)>& member) {
  const std::size_t nv = a.adj.size();
  std::vector<int> parent(nv, -2);
  std::vector<int> order{static_cast<int>(s[0])};
  parent[s[0]] = -1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int u : a.adj[order[h]])
      if (parent[u] == -2 && member(u)) {
        parent[u] = order[h];
        order.push_back(u);
      }
  std::vector<int> children(nv, 0);
  for (int v : order)
    if (parent[v] >= 0) ++children[parent[v]];
  std::vector<char> keep(nv, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    keep[v] = a.terminal[v] || children[v] > 0;
    if (!keep[v] && parent[v] >= 0) --children[parent[v]];
  }
  std::vector<EdgeIds> edges;
  for (int v : order) {
    if (!keep[v] || parent[v] < 0) continue;
    const int p = parent[v];
    if (v >= a.original) continue;  // the edge into a subdivision vertex is emitted from its far side
    if (p >= a.original) {
      edges.push_back(a.pseudo[p - a.original]);
    } else {
      edges.push_back(make_edge(static_cast<VertexId>(p), static_cast<VertexId>(v)));
    }
  }
  return Tree::from_edges(std::move(edges), s);
}

// Trees one after another, each a pruned BFS tree over what earlier ones left.
std::vector<Tree> greedy_seed(const Aux& a, const std::vector<VertexId>& s, int target) {
  std::vector<Tree> out;
  std::vector<int> owner(a.adj.size(), -1);
  for (int j = 0; j < target; ++j) {
    const auto member = [&](int v) { return a.terminal[v] || owner[v] < 0; };
    std::vector<char> seen(a.adj.size(), 0);
    std::vector<int> order{static_cast<int>(s[0])};
    seen[s[0]] = 1;
    for (std::size_t h = 0; h < order.size(); ++h)
      for (int u : a.adj[order[h]])
        if (!seen[u] && member(u)) {
          seen[u] = 1;
          order.push_back(u);
        }
    if (std::any_of(s.begin(), s.end(), [&](VertexId t) { return !seen[t]; })) break;
    Tree t = class_tree(a, s, member);
    for (VertexId v : t.vertices)
      if (!a.terminal[v]) owner[v] = j;
    for (const EdgeIds& e : t.edges)
      if (a.terminal[e.first] && a.terminal[e.second])
        for (std::size_t p = 0; p < a.pseudo.size(); ++p)
          if (a.pseudo[p] == e) owner[a.original + p] = j;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

int upper_bound_kappa4(const BurntPancakeGraph& g) {
  int delta = g.n();
  for (VertexId v = 0; v < g.vertex_count(); ++v) delta = std::min(delta, static_cast<int>(g.neighbours(v).size()));
  return delta - 1;
}

OracleResult max_idsts_bruteforce(const BurntPancakeGraph& g, const std::vector<VertexId>& s, int target,
                                  std::uint64_t budget) {
  if (s.size() < 2) throw std::invalid_argument("oracle needs at least two terminals");
  for (VertexId v : s)
    if (v >= g.vertex_count()) throw std::invalid_argument("oracle: terminal out of range");
  {
    std::vector<VertexId> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("oracle: terminals must be distinct");
  }
  if (target < 0 || target > 31) throw std::invalid_argument("oracle: target out of range");

  const Aux aux = make_aux(g, s);
  OracleResult result;
  result.s = s;
  result.certificate.n = g.n();
  result.certificate.s = s;
  result.certificate.case_trace = {"oracle"};
  result.certificate.trees = greedy_seed(aux, s, target);
  result.max_idsts_found = static_cast<int>(result.certificate.trees.size());
  if (budget == 0) {
    result.exhausted = false;
    return result;
  }
  if (result.max_idsts_found >= target) {
    result.exhausted = true;
    return result;
  }
  // No terminal can lie in more trees than it has incident edges.
  int cap = target;
  for (VertexId v : s) cap = std::min(cap, static_cast<int>(g.neighbours(v).size()));

  std::uint64_t remaining = budget;
  result.exhausted = true;
  for (int k = result.max_idsts_found + 1; k <= target; ++k) {
    if (k > cap) break;
    ClassSearch search(aux, s, k, remaining);
    const bool ok = search.run();
    result.expansions += search.nodes();
    remaining = search.nodes() >= remaining ? 0 : remaining - search.nodes();
    if (search.aborted()) {
      result.exhausted = false;
      break;
    }
    if (!ok) break;
    result.max_idsts_found = k;
    result.certificate.trees.clear();
    const State& st = search.solution();
    for (int j = 0; j < k; ++j)
      result.certificate.trees.push_back(
          class_tree(aux, s, [&](int v) { return aux.terminal[v] || st.assigned[v] == j; }));
  }
  return result;
}

Kappa4Summary kappa4_exact_small(const BurntPancakeGraph& g, const std::vector<std::vector<VertexId>>& sample,
                                 std::uint64_t budget) {
  Kappa4Summary summary;
  if (sample.empty()) {
    summary.matches_bound = false;
    return summary;
  }
  const int bound = upper_bound_kappa4(g);
  bool min_exhausted = false;
  for (const auto& s : sample) {
    ++summary.subsets;
    const OracleResult r = max_idsts_bruteforce(g, s, bound + 1, budget);
    if (!r.exhausted) summary.all_exhausted = false;
    if (summary.min_found < 0 || r.max_idsts_found < summary.min_found ||
        (r.max_idsts_found == summary.min_found && r.exhausted && !min_exhausted)) {
      summary.min_found = r.max_idsts_found;
      min_exhausted = r.exhausted;
      if (r.max_idsts_found < bound) summary.counterexample = s;
    }
  }
  summary.matches_bound = min_exhausted && summary.min_found == bound;
  return summary;
}

std::vector<std::vector<VertexId>> all_four_subsets(const BurntPancakeGraph& g) {
  const VertexId nv = static_cast<VertexId>(g.vertex_count());
  std::vector<std::vector<VertexId>> out;
  for (VertexId a = 0; a < nv; ++a)
    for (VertexId b = a + 1; b < nv; ++b)
      for (VertexId c = b + 1; c < nv; ++c)
        for (VertexId d = c + 1; d < nv; ++d) out.push_back({a, b, c, d});
  return out;
}

}  // namespace bpn
