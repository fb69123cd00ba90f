#include "cohesive/result.hpp"

#include <algorithm>

namespace cohesive {

std::string_view to_string(GroupingKind kind) {
  switch (kind) {
    case GroupingKind::ConnectedComponents:
      return "connected-components";
    case GroupingKind::Cliques:
      return "cliques";
    case GroupingKind::Clusters:
      return "clusters";
  }
  return "unknown";
}

NodeSet SubgraphResult::node_union() const {
  NodeSet out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void canonicalize(std::vector<NodeSet>& groups) {
  for (auto& grp : groups) {
    std::sort(grp.begin(), grp.end());
    grp.erase(std::unique(grp.begin(), grp.end()), grp.end());
  }
  std::sort(groups.begin(), groups.end(), [](const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
}

SubgraphResult make_result(std::string model, ParamMap params, GroupingKind kind,
                           std::vector<NodeSet> groups) {
  canonicalize(groups);
  return {std::move(model), std::move(params), kind, std::move(groups)};
}

}  // namespace cohesive
