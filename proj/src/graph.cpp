#include "cohesive/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "detail.hpp"

namespace cohesive {

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (!valid(u) || !valid(v) || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::optional<NodeId> Graph::id_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::require_id(std::string_view label) const {
  auto id = id_of(label);
  if (!id) throw std::invalid_argument("unknown node label '" + std::string(label) + "'");
  return *id;
}

NodeId GraphBuilder::add_node(std::string_view label) {
  std::string key(label);
  auto [it, inserted] = index_.try_emplace(key, static_cast<NodeId>(labels_.size()));
  if (inserted) {
    labels_.push_back(std::move(key));
    adjacency_.emplace_back();
  }
  return it->second;
}

bool GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  NodeId u = add_node(a);
  NodeId v = add_node(b);
  return add_edge(u, v);
}

bool GraphBuilder::add_edge(NodeId u, NodeId v) {
  if (u >= labels_.size() || v >= labels_.size()) throw std::invalid_argument("node id out of range");
  if (u == v) {
    ++report_.self_loops_dropped;
    return false;
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  return true;
}

Graph GraphBuilder::build() && { return std::move(*this).finish().graph; }

LoadedGraph GraphBuilder::finish() && {
  Graph g;
  const std::size_t n = labels_.size();
  std::size_t raw = 0;
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    raw += nb.size();
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adjacency_[v].size();
  g.targets_.reserve(g.offsets_[n]);
  for (auto& nb : adjacency_) g.targets_.insert(g.targets_.end(), nb.begin(), nb.end());
  report_.duplicate_edges += (raw - g.targets_.size()) / 2;

  // Edge ids in lexicographic order: scanning u ascending and its larger
  // neighbors ascending enumerates (u, v) pairs in order.
  g.edge_slots_.assign(g.targets_.size(), 0);
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t i = g.offsets_[u]; i < g.offsets_[u + 1]; ++i) {
      NodeId v = g.targets_[i];
      if (u < v) {
        g.edge_slots_[i] = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({u, v});
      }
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t i = g.offsets_[u]; i < g.offsets_[u + 1]; ++i) {
      NodeId v = g.targets_[i];
      if (v < u) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        auto pos = std::lower_bound(first, last, u) - g.targets_.begin();
        g.edge_slots_[i] = g.edge_slots_[static_cast<std::size_t>(pos)];
      }
    }
  }
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  return {std::move(g), report_};
}

LoadedGraph load_edge_list(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    tokens.clear();
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected 2 labels, found " + std::to_string(tokens.size()));
    }
    builder.add_edge(tokens[0], tokens[1]);
  }
  builder.report().lines = lineno;
  return std::move(builder).finish();
}

LoadedGraph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += g.label(e.u);
    out += ' ';
    out += g.label(e.v);
    out += '\n';
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const NodeSet& nodes) {
  GraphBuilder b;
  std::vector<NodeId> local(g.node_count(), static_cast<NodeId>(-1));
  for (NodeId v : nodes) local[v] = b.add_node(g.label(v));
  for (NodeId v : nodes) {
    for (NodeId w : g.neighbors(v)) {
      if (v < w && local[w] != static_cast<NodeId>(-1)) b.add_edge(local[v], local[w]);
    }
  }
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node(std::to_string(i));
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node(std::to_string(i));
  for (NodeId i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph toy_graph() {
  static constexpr int kEdges[][2] = {
      {1, 2},  {1, 3},  {2, 3},  {2, 4},  {2, 5},  {3, 4},  {3, 5},  {4, 5},  {4, 6},  {5, 6},
      {6, 7},  {6, 8},  {6, 9},  {6, 10}, {7, 8},  {7, 9},  {7, 10}, {8, 9},  {8, 10}, {9, 10},
      {9, 11}, {10, 11}, {6, 12}, {7, 12}, {9, 12}, {6, 13}, {8, 13}, {10, 13}};
  GraphBuilder b;
  for (int i = 1; i <= 13; ++i) b.add_node(std::to_string(i));
  for (const auto& e : kEdges) b.add_edge(static_cast<NodeId>(e[0] - 1), static_cast<NodeId>(e[1] - 1));
  return std::move(b).build();
}

std::size_t edge_support(const Graph& g, NodeId u, NodeId v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

NodeSet bounded_neighborhood(const Graph& g, NodeId v, unsigned h) {
  if (!g.valid(v)) throw std::invalid_argument("node id out of range");
  if (h == 0) throw std::invalid_argument("h must be positive");
  std::vector<unsigned> dist(g.node_count(), ~0u);
  std::vector<NodeId> frontier{v}, next;
  NodeSet out;
  dist[v] = 0;
  for (unsigned depth = 1; depth <= h && !frontier.empty(); ++depth) {
    next.clear();
    for (NodeId x : frontier) {
      for (NodeId y : g.neighbors(x)) {
        if (dist[y] == ~0u) {
          dist[y] = depth;
          next.push_back(y);
          out.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void sort_groups(std::vector<NodeSet>& groups) {
  for (auto& grp : groups) std::sort(grp.begin(), grp.end());
  std::sort(groups.begin(), groups.end(), [](const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
}

}  // namespace

std::vector<NodeSet> connected_components(const Graph& g, const NodeSet& restrict) {
  detail::Mask in(g.node_count(), 0);
  for (NodeId v : restrict) in[v] = 1;
  std::vector<NodeSet> out;
  std::vector<NodeId> stack;
  for (NodeId s : restrict) {
    if (in[s] != 1) continue;
    NodeSet comp{s};
    in[s] = 2;
    stack.assign(1, s);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : g.neighbors(x)) {
        if (in[y] == 1) {
          in[y] = 2;
          comp.push_back(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  sort_groups(out);
  return out;
}

std::vector<NodeSet> connected_components(const Graph& g) {
  NodeSet all(g.node_count());
  std::iota(all.begin(), all.end(), NodeId{0});
  return connected_components(g, all);
}

std::vector<std::string> to_labels(const Graph& g, const NodeSet& nodes) {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(g.label(v));
  return out;
}

NodeSet from_labels(const Graph& g, const std::vector<std::string>& labels) {
  NodeSet out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(g.require_id(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

NodeSet mask_to_set(const Mask& mask) {
  NodeSet out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<NodeId>(i));
  return out;
}

Mask set_to_mask(std::size_t n, const NodeSet& nodes) {
  Mask m(n, 0);
  for (NodeId v : nodes) m[v] = 1;
  return m;
}

std::vector<NodeSet> edge_components(const Graph& g, const Mask& edge_alive) {
  const std::size_t n = g.node_count();
  Mask seen(n, 0);
  std::vector<NodeSet> out;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    bool has_edge = false;
    for (EdgeId e : g.incident_edges(s)) has_edge = has_edge || edge_alive[e];
    if (!has_edge) continue;
    seen[s] = 1;
    NodeSet comp{s};
    stack.assign(1, s);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      auto nb = g.neighbors(x);
      auto inc = g.incident_edges(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (edge_alive[inc[i]] && !seen[nb[i]]) {
          seen[nb[i]] = 1;
          comp.push_back(nb[i]);
          stack.push_back(nb[i]);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  sort_groups(out);
  return out;
}

std::vector<NodeSet> node_components(const Graph& g, const Mask& node_alive) {
  auto comps = connected_components(g, mask_to_set(node_alive));
  std::erase_if(comps, [](const NodeSet& c) { return c.size() < 2; });
  return comps;
}

}  // namespace detail

}  // namespace cohesive
