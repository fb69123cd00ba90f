#include "cohesive/clique_models.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "cohesive/core_models.hpp"
#include "cohesive/deadline.hpp"

namespace cohesive {

namespace {

NodeSet intersect(const NodeSet& a, std::span<const NodeId> b) {
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const NodeSet& a, std::span<const NodeId> b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const CliqueOptions& opts) : g_(g), opts_(opts) {}

  std::vector<NodeSet> run() {
    const std::size_t n = g_.node_count();
    // Degeneracy order: ascending coreness, ties by id.
    auto core = core_decomposition(g_).values;
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return core[a] < core[b]; });
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

    for (NodeId v : order) {
      if (g_.degree(v) == 0) continue;
      NodeSet P, X;
      for (NodeId w : g_.neighbors(v)) (rank[w] > rank[v] ? P : X).push_back(w);
      NodeSet R{v};
      expand(R, std::move(P), std::move(X));
    }
    canonicalize(out_);
    return std::move(out_);
  }

 private:
  void expand(NodeSet& R, NodeSet P, NodeSet X) {
    poll_deadline();
    if (P.empty()) {
      if (X.empty()) emit(R);
      return;
    }
    NodeId pivot = 0;
    std::size_t best = 0;
    bool chosen = false;
    auto consider = [&](NodeId u) {
      std::size_t c = intersection_size(P, g_.neighbors(u));
      if (!chosen || c > best || (c == best && u < pivot)) {
        pivot = u;
        best = c;
        chosen = true;
      }
    };
    for (NodeId u : P) consider(u);
    for (NodeId u : X) consider(u);

    NodeSet branch;
    auto pn = g_.neighbors(pivot);
    std::set_difference(P.begin(), P.end(), pn.begin(), pn.end(), std::back_inserter(branch));
    for (NodeId v : branch) {
      auto nv = g_.neighbors(v);
      R.push_back(v);
      expand(R, intersect(P, nv), intersect(X, nv));
      R.pop_back();
      P.erase(std::lower_bound(P.begin(), P.end(), v));
      X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
  }

  void emit(const NodeSet& R) {
    if (out_.size() >= opts_.max_cliques) {
      throw BudgetExceeded("maximal clique enumeration exceeded " + std::to_string(opts_.max_cliques) +
                           " cliques");
    }
    NodeSet c = R;
    std::sort(c.begin(), c.end());
    out_.push_back(std::move(c));
  }

  const Graph& g_;
  const CliqueOptions& opts_;
  std::vector<NodeSet> out_;
};

}  // namespace

std::vector<NodeSet> maximal_cliques(const Graph& g, const CliqueOptions& opts) {
  return Enumerator(g, opts).run();
}

SubgraphResult at_least_k_clique(const Graph& g, unsigned k, const CliqueOptions& opts) {
  if (k < 1) throw std::invalid_argument("at-least-k clique requires k >= 1");
  auto cliques = maximal_cliques(g, opts);
  std::erase_if(cliques, [k](const NodeSet& c) { return c.size() < k; });
  return make_result("clique", {{"k", k}}, GroupingKind::Cliques, std::move(cliques));
}

Graph distance_closure(const Graph& g, unsigned k, const CliqueOptions& opts) {
  if (k < 1) throw std::invalid_argument("k-distance clique requires k >= 1");
  const std::size_t n = g.node_count();
  GraphBuilder b;
  for (NodeId v = 0; v < n; ++v) b.add_node(g.label(v));
  std::size_t added = 0;
  for (NodeId v = 0; v < n; ++v) {
    poll_deadline();
    for (NodeId w : bounded_neighborhood(g, v, k)) {
      if (w <= v) continue;
      if (++added > opts.max_closure_edges) {
        throw BudgetExceeded("distance closure exceeded " + std::to_string(opts.max_closure_edges) + " edges");
      }
      b.add_edge(v, w);
    }
  }
  return std::move(b).build();
}

SubgraphResult k_distance_clique(const Graph& g, unsigned k, const CliqueOptions& opts) {
  Graph closure = distance_closure(g, k, opts);
  return make_result("k-distance-clique", {{"k", k}}, GroupingKind::Cliques, maximal_cliques(closure, opts));
}

}  // namespace cohesive
