#pragma once

#include <cstddef>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

namespace cohesive {

struct CliqueOptions {
  // Enumeration aborts with BudgetExceeded past this many maximal cliques.
  std::size_t max_cliques = 10'000'000;
  // Distance-closure construction aborts past this many closure edges.
  std::size_t max_closure_edges = 50'000'000;
};

/// All maximal cliques with at least two nodes (an isolated node is not
/// reported as a clique). Bron–Kerbosch over a degeneracy ordering with
/// pivot = node with the most candidates in its neighborhood, ties to the
/// smallest id. Output is canonical regardless of recursion order.
std::vector<NodeSet> maximal_cliques(const Graph& g, const CliqueOptions& opts = {});

/// Maximal cliques with at least k nodes. k >= 1.
SubgraphResult at_least_k_clique(const Graph& g, unsigned k, const CliqueOptions& opts = {});

/// Graph on the same nodes (same ids and labels) joining every pair at
/// distance <= k in g.
Graph distance_closure(const Graph& g, unsigned k, const CliqueOptions& opts = {});

/// Maximal cliques of the distance-k closure; distances are taken in g.
SubgraphResult k_distance_clique(const Graph& g, unsigned k, const CliqueOptions& opts = {});

}  // namespace cohesive
