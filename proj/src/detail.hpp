#pragma once

// Internal helpers shared by the model implementations.

#include <vector>

#include "cohesive/graph.hpp"

namespace cohesive::detail {

using Mask = std::vector<char>;

NodeSet mask_to_set(const Mask& mask);
Mask set_to_mask(std::size_t n, const NodeSet& nodes);

// Components over the kept edges; nodes without a kept edge are dropped.
std::vector<NodeSet> edge_components(const Graph& g, const Mask& edge_alive);

// Components of the node-induced subgraph, isolated members dropped.
std::vector<NodeSet> node_components(const Graph& g, const Mask& node_alive);

// Calls fn(w, e_uw, e_vw) for every w adjacent to both u and v through
// alive edges.
template <typename Fn>
void for_common_neighbors(const Graph& g, NodeId u, NodeId v, const Mask& edge_alive, Fn&& fn) {
  auto nu = g.neighbors(u);
  auto eu = g.incident_edges(u);
  auto nv = g.neighbors(v);
  auto ev = g.incident_edges(v);
  std::size_t i = 0, j = 0;
  while (i < nu.size() && j < nv.size()) {
    if (nu[i] < nv[j]) {
      ++i;
    } else if (nu[i] > nv[j]) {
      ++j;
    } else {
      if (edge_alive[eu[i]] && edge_alive[ev[j]]) fn(nu[i], eu[i], ev[j]);
      ++i;
      ++j;
    }
  }
}

// Same, restricted to alive nodes instead of alive edges.
template <typename Fn>
void for_common_alive_nodes(const Graph& g, NodeId u, NodeId v, const Mask& node_alive, Fn&& fn) {
  auto nu = g.neighbors(u);
  auto eu = g.incident_edges(u);
  auto nv = g.neighbors(v);
  auto ev = g.incident_edges(v);
  std::size_t i = 0, j = 0;
  while (i < nu.size() && j < nv.size()) {
    if (nu[i] < nv[j]) {
      ++i;
    } else if (nu[i] > nv[j]) {
      ++j;
    } else {
      if (node_alive[nu[i]]) fn(nu[i], eu[i], ev[j]);
      ++i;
      ++j;
    }
  }
}

}  // namespace cohesive::detail
