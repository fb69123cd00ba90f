#pragma once

#include <cstdint>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

namespace cohesive {

struct CorenessLabels {
  std::vector<std::uint32_t> values;  // indexed by node id
  std::uint32_t max() const;
};

// Contour value per node from peak decomposition.
struct ContourLabels {
  std::vector<std::uint32_t> values;
};

/// Coreness of every node by bucket peeling (Batagelj–Zaversnik), O(|E|).
CorenessLabels core_decomposition(const Graph& g);

/// Maximal subgraph with minimum degree >= k, one group per component.
SubgraphResult k_core(const Graph& g, unsigned k);

/// Repeatedly removes nodes with fewer than k other nodes within distance h,
/// where distance is measured in the surviving subgraph. h >= 1.
SubgraphResult kh_core(const Graph& g, unsigned k, unsigned h);

/// Maximal subgraph in which every node keeps >= k neighbors and at least a
/// fraction p of its degree in g. Both constraints cascade together; the
/// fraction's denominator is always the degree in g. 0 <= p <= 1.
SubgraphResult kp_core(const Graph& g, unsigned k, double p);

/// Assigns each node to one contour: take the maximum core of what remains,
/// label it with its coreness, remove it, repeat. Nodes left without edges
/// get contour 0.
ContourLabels peak_decomposition(const Graph& g);

/// Nodes with contour >= k, grouped by connected component.
SubgraphResult k_peak(const Graph& g, unsigned k);

}  // namespace cohesive
