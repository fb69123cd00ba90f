#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cohesive/graph.hpp"

namespace cohesive {

enum class GroupingKind { ConnectedComponents, Cliques, Clusters };

std::string_view to_string(GroupingKind kind);

using ParamMap = std::map<std::string, double>;

/// Output of one model run: node groups plus the model and parameters that
/// produced them.
///
/// Groups are kept canonical: members ascending, groups ordered by size
/// descending then by smallest member. Connected-component results have
/// disjoint groups; clique results may overlap.
struct SubgraphResult {
  std::string model;
  ParamMap params;
  GroupingKind kind = GroupingKind::ConnectedComponents;
  std::vector<NodeSet> groups;

  NodeSet node_union() const;
  bool empty() const { return groups.empty(); }
};

// Sorts members and groups into canonical order and drops duplicate groups.
void canonicalize(std::vector<NodeSet>& groups);

SubgraphResult make_result(std::string model, ParamMap params, GroupingKind kind,
                           std::vector<NodeSet> groups);

}  // namespace cohesive
