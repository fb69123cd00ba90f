#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cohesive {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

struct Edge {
  NodeId u;
  NodeId v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected unweighted graph in CSR form.
///
/// Node ids are dense and 0-based; every node carries an external string
/// label. Neighbor lists are sorted ascending and every adjacency slot
/// records the id of the edge it belongs to, so peeling algorithms can keep
/// per-edge state in flat arrays. Edges are numbered in lexicographic order
/// of (min endpoint, max endpoint).
///
/// Immutable after construction; all queries are const.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(NodeId v) const {
    return {edge_slots_.data() + offsets_[v], edge_slots_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> id_of(std::string_view label) const;
  // Throws std::invalid_argument for unknown labels.
  NodeId require_id(std::string_view label) const;

  bool valid(NodeId v) const { return v < labels_.size(); }

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<EdgeId> edge_slots_;
  std::vector<Edge> edges_;
};

struct LoadReport {
  std::size_t lines = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
};

/// Accumulates labelled nodes and edges; ids follow first-appearance order.
class GraphBuilder {
 public:
  NodeId add_node(std::string_view label);
  // Returns false when the edge was a self-loop or already present.
  bool add_edge(std::string_view a, std::string_view b);
  bool add_edge(NodeId u, NodeId v);

  const LoadReport& report() const { return report_; }
  LoadReport& report() { return report_; }

  Graph build() &&;
  // Like build(), also returning the tally of dropped input.
  LoadedGraph finish() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  LoadReport report_;
};

/// Parses the edge-list format: one edge per line, two whitespace-separated
/// labels, '#' comment lines and blank lines skipped.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list(std::string_view text);
LoadedGraph load_edge_list_file(const std::string& path);

// One "u v" line per edge, in edge-id order.
std::string to_edge_list(const Graph& g);

// Graph over the given nodes keeping their labels; ids are renumbered in the
// order of `nodes`.
Graph induced_subgraph(const Graph& g, const NodeSet& nodes);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// The 13-node, 28-edge example network; node with label "i" has id i-1.
Graph toy_graph();

/// Number of triangles containing the edge (u, v). Throws
/// std::invalid_argument when (u, v) is not an edge.
std::size_t edge_support(const Graph& g, NodeId u, NodeId v);

/// All nodes other than v within distance h of v.
NodeSet bounded_neighborhood(const Graph& g, NodeId v, unsigned h);

/// Connected components of the subgraph induced by `restrict`, ordered by
/// size descending then smallest member.
std::vector<NodeSet> connected_components(const Graph& g, const NodeSet& restrict);
std::vector<NodeSet> connected_components(const Graph& g);

// Labels for a node set, in the set's order.
std::vector<std::string> to_labels(const Graph& g, const NodeSet& nodes);
NodeSet from_labels(const Graph& g, const std::vector<std::string>& labels);

}  // namespace cohesive
