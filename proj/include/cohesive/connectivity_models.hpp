#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

namespace cohesive {

/// Maximal node sets whose induced subgraph stays connected after removing
/// any k-1 nodes. Groups have at least k+2 nodes: the only (k+1)-node
/// candidate is a bare K_{k+1}, which removing k nodes reduces to a single
/// node rather than disconnecting, so it is not reported. Found by recursive splitting on minimum vertex cuts; the cut
/// nodes go to every side, so groups may overlap and the result uses
/// GroupingKind::Clusters. k >= 1.
SubgraphResult k_vcc(const Graph& g, unsigned k);

/// Maximal node sets of >= 2 nodes whose induced subgraph stays connected
/// after removing any k-1 edges. Found by recursive splitting on global
/// minimum cuts; groups are disjoint. k >= 1.
SubgraphResult k_ecc(const Graph& g, unsigned k);

/// Vertex connectivity of G[nodes]; |nodes|-1 for complete subgraphs and 0
/// for disconnected ones.
std::size_t vertex_connectivity(const Graph& g, const NodeSet& nodes);

/// Edge connectivity of G[nodes] (0 when disconnected or |nodes| < 2).
std::size_t edge_connectivity(const Graph& g, const NodeSet& nodes);

/// A vertex cut of G[nodes] with fewer than k nodes, if one exists.
std::optional<NodeSet> small_vertex_cut(const Graph& g, const NodeSet& nodes, std::size_t k);

}  // namespace cohesive
