#pragma once

#include <cstdint>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

namespace cohesive {

// Per-edge labels, indexed by EdgeId.
struct TrussnessLabels {
  std::vector<std::uint32_t> values;
  std::uint32_t max() const;
};

struct TricontourLabels {
  std::vector<std::uint32_t> values;
};

/// Trussness of every edge: support-bucketed edge peeling, each edge
/// labelled with (support at removal) + 2.
TrussnessLabels truss_decomposition(const Graph& g);

/// Maximal edge set in which each edge lies in >= k-2 triangles of the kept
/// edges; groups are components over kept edges. k >= 2.
SubgraphResult k_truss(const Graph& g, unsigned k);

/// Repeatedly peels off the maximum-trussness edges of the remaining graph
/// as one tricontour. Triangle-free leftovers get tricontour 2.
TricontourLabels tripeak_decomposition(const Graph& g);

/// Edges with tricontour >= k, grouped by connected component. k >= 2.
SubgraphResult k_tripeak(const Graph& g, unsigned k);

}  // namespace cohesive
