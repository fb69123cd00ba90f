#include "cohesive/connectivity_models.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "cohesive/deadline.hpp"
#include "detail.hpp"
#include "maxflow.hpp"

namespace cohesive {

namespace {

// Induced subgraph on a node subset with local ids 0..n-1.
struct LocalGraph {
  NodeSet nodes;
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(nodes.size()); }
  bool adjacent(int a, int b) const { return std::binary_search(adj[a].begin(), adj[a].end(), b); }
};

LocalGraph make_local(const Graph& g, const NodeSet& nodes) {
  LocalGraph L{nodes, std::vector<std::vector<int>>(nodes.size())};
  std::unordered_map<NodeId, int> local;
  local.reserve(nodes.size() * 2);
  for (std::size_t i = 0; i < nodes.size(); ++i) local.emplace(nodes[i], static_cast<int>(i));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId w : g.neighbors(nodes[i])) {
      auto it = local.find(w);
      if (it != local.end()) L.adj[i].push_back(it->second);
    }
    std::sort(L.adj[i].begin(), L.adj[i].end());
  }
  return L;
}

bool is_connected(const LocalGraph& L) {
  if (L.size() == 0) return true;
  std::vector<char> seen(L.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : L.adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == L.size();
}

bool is_complete(const LocalGraph& L) {
  for (const auto& a : L.adj)
    if (static_cast<int>(a.size()) != L.size() - 1) return false;
  return true;
}

struct LocalCut {
  int size;
  std::vector<int> nodes;
};

// Minimum s-t vertex separator for non-adjacent s, t, via node splitting:
// node x becomes in(x)=2x -> out(x)=2x+1 with capacity 1.
LocalCut st_vertex_cut(const LocalGraph& L, int s, int t, int limit) {
  const int n = L.size();
  const int big = n + 1;
  detail::FlowNetwork net(2 * n);
  for (int x = 0; x < n; ++x) {
    net.add_arc(2 * x, 2 * x + 1, (x == s || x == t) ? big : 1);
    for (int y : L.adj[x]) net.add_arc(2 * x + 1, 2 * y, big);
  }
  int flow = net.max_flow(2 * s + 1, 2 * t, limit);
  LocalCut cut{flow, {}};
  if (flow < limit) {
    auto side = net.source_side(2 * s + 1);
    for (int x = 0; x < n; ++x)
      if (side[2 * x] && !side[2 * x + 1]) cut.nodes.push_back(x);
  }
  return cut;
}

// Returns a vertex cut of size < limit, or nullopt when the connectivity is
// at least `limit`. Pairs checked: the minimum-degree node against every
// non-neighbor, and every non-adjacent pair of its neighbors.
std::optional<std::vector<int>> local_small_cut(const LocalGraph& L, int limit) {
  const int n = L.size();
  if (n <= 1 || is_complete(L)) return std::nullopt;
  if (!is_connected(L)) return std::vector<int>{};
  int v = 0;
  for (int x = 1; x < n; ++x)
    if (L.adj[x].size() < L.adj[v].size()) v = x;
  for (int w = 0; w < n; ++w) {
    if (w == v || L.adjacent(v, w)) continue;
    auto cut = st_vertex_cut(L, v, w, limit);
    if (cut.size < limit) return cut.nodes;
  }
  const auto& nb = L.adj[v];
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (L.adjacent(nb[i], nb[j])) continue;
      auto cut = st_vertex_cut(L, nb[i], nb[j], limit);
      if (cut.size < limit) return cut.nodes;
    }
  }
  return std::nullopt;
}

struct MinCut {
  int value;
  std::vector<int> side;  // local ids on one side
};

// Stoer–Wagner global minimum cut. Stops early once a cut below
// `stop_below` is found (that cut is then returned, not necessarily minimum).
MinCut stoer_wagner(const LocalGraph& L, int stop_below = -1) {
  const int n = L.size();
  if (n < 2) return {0, {}};
  std::vector<std::unordered_map<int, int>> w(n);
  for (int x = 0; x < n; ++x)
    for (int y : L.adj[x]) w[x][y] = 1;
  std::vector<std::vector<int>> members(n);
  for (int x = 0; x < n; ++x) members[x] = {x};
  std::vector<int> active(n);
  for (int x = 0; x < n; ++x) active[x] = x;

  MinCut best{std::numeric_limits<int>::max(), {}};
  std::vector<int> key(n, 0);
  std::vector<char> added(n, 0);
  while (active.size() > 1) {
    poll_deadline();
    for (int x : active) {
      key[x] = 0;
      added[x] = 0;
    }
    std::priority_queue<std::pair<int, int>> heap;
    for (int x : active) heap.push({0, -x});
    int prev = -1, last = -1;
    for (std::size_t step = 0; step < active.size(); ++step) {
      int x;
      while (true) {
        auto [kx, nx] = heap.top();
        heap.pop();
        x = -nx;
        if (!added[x] && kx == key[x]) break;
      }
      added[x] = 1;
      prev = last;
      last = x;
      for (auto [y, wt] : w[x]) {
        if (!added[y]) {
          key[y] += wt;
          heap.push({key[y], -y});
        }
      }
    }
    if (key[last] < best.value) {
      best.value = key[last];
      best.side = members[last];
      if (best.value < stop_below) break;
    }
    // Merge last into prev.
    for (auto [y, wt] : w[last]) {
      if (y == prev) continue;
      w[prev][y] += wt;
      w[y][prev] += wt;
      w[y].erase(last);
    }
    w[prev].erase(last);
    w[last].clear();
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    active.erase(std::find(active.begin(), active.end(), last));
  }
  return best;
}

// Nodes of `nodes` surviving the min-degree-k peel of G[nodes].
NodeSet peel_to_core(const Graph& g, const NodeSet& nodes, unsigned k) {
  detail::Mask in = detail::set_to_mask(g.node_count(), nodes);
  std::unordered_map<NodeId, std::size_t> deg;
  std::vector<NodeId> stack;
  for (NodeId v : nodes) {
    std::size_t d = 0;
    for (NodeId w : g.neighbors(v)) d += in[w] ? 1 : 0;
    deg[v] = d;
  }
  for (NodeId v : nodes) {
    if (deg[v] < k) {
      in[v] = 0;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(v)) {
      if (in[w] && --deg[w] < k) {
        in[w] = 0;
        stack.push_back(w);
      }
    }
  }
  NodeSet out;
  for (NodeId v : nodes)
    if (in[v]) out.push_back(v);
  return out;
}

NodeSet all_nodes(const Graph& g) {
  NodeSet all(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
  return all;
}

// Drops duplicates and any group contained in another group.
void keep_maximal(std::vector<NodeSet>& groups) {
  canonicalize(groups);  // larger groups first
  std::vector<NodeSet> kept;
  for (auto& grp : groups) {
    bool contained = std::any_of(kept.begin(), kept.end(), [&](const NodeSet& big) {
      return std::includes(big.begin(), big.end(), grp.begin(), grp.end());
    });
    if (!contained) kept.push_back(std::move(grp));
  }
  groups = std::move(kept);
}

}  // namespace

std::optional<NodeSet> small_vertex_cut(const Graph& g, const NodeSet& nodes, std::size_t k) {
  auto L = make_local(g, nodes);
  auto cut = local_small_cut(L, static_cast<int>(k));
  if (!cut) return std::nullopt;
  NodeSet out;
  for (int x : *cut) out.push_back(L.nodes[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t vertex_connectivity(const Graph& g, const NodeSet& nodes) {
  auto L = make_local(g, nodes);
  const int n = L.size();
  if (n <= 1) return 0;
  if (!is_connected(L)) return 0;
  if (is_complete(L)) return static_cast<std::size_t>(n - 1);
  int v = 0;
  for (int x = 1; x < n; ++x)
    if (L.adj[x].size() < L.adj[v].size()) v = x;
  int best = static_cast<int>(L.adj[v].size());
  for (int w = 0; w < n; ++w) {
    if (w == v || L.adjacent(v, w)) continue;
    best = std::min(best, st_vertex_cut(L, v, w, best).size);
  }
  const auto& nb = L.adj[v];
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!L.adjacent(nb[i], nb[j])) best = std::min(best, st_vertex_cut(L, nb[i], nb[j], best).size);
  return static_cast<std::size_t>(best);
}

std::size_t edge_connectivity(const Graph& g, const NodeSet& nodes) {
  auto L = make_local(g, nodes);
  if (L.size() < 2 || !is_connected(L)) return 0;
  return static_cast<std::size_t>(stoer_wagner(L).value);
}

SubgraphResult k_vcc(const Graph& g, unsigned k) {
  if (k < 1) throw std::invalid_argument("k-VCC requires k >= 1");
  std::vector<NodeSet> found;
  std::vector<NodeSet> work{all_nodes(g)};
  while (!work.empty()) {
    poll_deadline();
    NodeSet candidate = std::move(work.back());
    work.pop_back();
    for (auto& comp : connected_components(g, peel_to_core(g, candidate, k))) {
      if (comp.size() < k + 2) continue;
      auto L = make_local(g, comp);
      auto cut = local_small_cut(L, static_cast<int>(k));
      if (!cut) {
        found.push_back(std::move(comp));
        continue;
      }
      NodeSet separator;
      for (int x : *cut) separator.push_back(L.nodes[x]);
      std::sort(separator.begin(), separator.end());
      NodeSet rest;
      std::set_difference(comp.begin(), comp.end(), separator.begin(), separator.end(), std::back_inserter(rest));
      for (auto& part : connected_components(g, rest)) {
        part.insert(part.end(), separator.begin(), separator.end());
        std::sort(part.begin(), part.end());
        work.push_back(std::move(part));
      }
    }
  }
  // A (k+1)-node group is a bare K_{k+1}; see the header.
  std::erase_if(found, [&](const NodeSet& grp) { return grp.size() < k + 2; });
  keep_maximal(found);
  return make_result("k-vcc", {{"k", k}}, GroupingKind::Clusters, std::move(found));
}

SubgraphResult k_ecc(const Graph& g, unsigned k) {
  if (k < 1) throw std::invalid_argument("k-ECC requires k >= 1");
  std::vector<NodeSet> found;
  std::vector<NodeSet> work{all_nodes(g)};
  while (!work.empty()) {
    poll_deadline();
    NodeSet candidate = std::move(work.back());
    work.pop_back();
    for (auto& comp : connected_components(g, peel_to_core(g, candidate, k))) {
      if (comp.size() < 2) continue;
      auto L = make_local(g, comp);
      auto cut = stoer_wagner(L, static_cast<int>(k));
      if (cut.value >= static_cast<int>(k)) {
        found.push_back(std::move(comp));
        continue;
      }
      detail::Mask one_side(L.size(), 0);
      for (int x : cut.side) one_side[x] = 1;
      NodeSet a, b;
      for (int x = 0; x < L.size(); ++x) (one_side[x] ? a : b).push_back(L.nodes[x]);
      work.push_back(std::move(a));
      work.push_back(std::move(b));
    }
  }
  return make_result("k-ecc", {{"k", k}}, GroupingKind::ConnectedComponents, std::move(found));
}

}  // namespace cohesive
