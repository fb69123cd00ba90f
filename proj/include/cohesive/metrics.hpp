#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

namespace cohesive {

enum class MetricLevel { Global, Local };

std::string_view to_string(MetricLevel level);

/// Named metric values in a fixed, documented order.
struct MetricReport {
  MetricLevel level = MetricLevel::Global;
  std::vector<std::pair<std::string, double>> values;

  std::optional<double> get(std::string_view name) const;
  bool empty() const { return values.empty(); }
};

/// Metrics of H = union of all groups, as one induced subgraph of g:
/// average_degree, cut_ratio, clustering_coefficient (transitivity of G[H]),
/// edge_density, inverse_conductance, average_component_size (mean size of
/// the connected components of G[H]). Empty H gives an empty report; H = V
/// gives cut_ratio = inverse_conductance = 1.
MetricReport global_metrics(const Graph& g, const SubgraphResult& r);

/// Per-group metrics averaged uniformly over groups: edge_density (0 for a
/// singleton), vertex_density, inverse_conductance, modularity (degrees in
/// g), average_component_size. No groups gives an empty report.
MetricReport local_metrics(const Graph& g, const SubgraphResult& r);

struct GroundTruth {
  std::vector<NodeSet> communities;  // pairwise disjoint

  // Community containing v, if any.
  const NodeSet* community_of(NodeId v) const;
};

/// One community per line, whitespace-separated labels of g; '#' lines and
/// blank lines skipped. Unknown labels and overlapping communities raise
/// ParseError.
GroundTruth parse_ground_truth(std::string_view text, const Graph& g);
GroundTruth load_ground_truth_file(const std::string& path, const Graph& g);

/// The largest group containing q (ties: smallest first member); empty when
/// q is in no group.
NodeSet community_for_query(const SubgraphResult& r, NodeId q);

struct AccuracyScores {
  double nmi = 0;
  double ari = 0;
  double f1 = 0;
  std::size_t queries = 0;
};

/// Agreement between two membership vectors over n nodes, given as the
/// member sets. NMI uses the arithmetic mean of the two entropies; a
/// constant vector scores 0 for NMI and ARI unless both vectors are equal.
AccuracyScores binary_scores(std::size_t n, const NodeSet& predicted, const NodeSet& truth);

class UndefinedScore : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Macro-average of binary_scores over every query node of r that some
/// truth community contains. Throws UndefinedScore when there is none.
AccuracyScores community_accuracy(const Graph& g, const SubgraphResult& r, const GroundTruth& truth);

}  // namespace cohesive
