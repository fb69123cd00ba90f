#include "cohesive/hybrid_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cohesive/core_models.hpp"
#include "cohesive/deadline.hpp"
#include "detail.hpp"

namespace cohesive {

namespace {

constexpr double kSlack = 1e-9;

// Features of the alive nodes (row i = i-th alive node) in the subgraph
// induced by the alive nodes.
Eigen::MatrixXd alive_features(const Graph& g, const detail::Mask& alive, const std::vector<NodeId>& rows,
                               const std::vector<NodeFeature>& features) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(features.size()));
  const bool need_tri = std::find(features.begin(), features.end(), NodeFeature::Triangles) != features.end();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    NodeId v = rows[r];
    std::size_t deg = 0, tri = 0;
    for (NodeId w : g.neighbors(v)) {
      if (!alive[w]) continue;
      ++deg;
      if (need_tri) {
        detail::for_common_alive_nodes(g, v, w, alive, [&](NodeId z, EdgeId, EdgeId) { tri += z > w; });
      }
    }
    for (std::size_t f = 0; f < features.size(); ++f) {
      x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(f)) =
          features[f] == NodeFeature::Degree ? static_cast<double>(deg) : static_cast<double>(tri);
    }
  }
  return x;
}

SubgraphResult edges_result(const Graph& g, const char* model, ParamMap params, const detail::Mask& keep) {
  return make_result(model, std::move(params), GroupingKind::ConnectedComponents, detail::edge_components(g, keep));
}

}  // namespace

Eigen::MatrixXd node_features(const Graph& g, const std::vector<NodeFeature>& features) {
  detail::Mask alive(g.node_count(), 1);
  std::vector<NodeId> rows(g.node_count());
  std::iota(rows.begin(), rows.end(), NodeId{0});
  return alive_features(g, alive, rows, features);
}

SubgraphResult alphacore(const Graph& g, double alpha, const AlphacoreOptions& opts) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alphacore requires 0 < alpha <= 1");
  if (opts.features.empty()) throw std::invalid_argument("alphacore needs at least one feature");
  const std::size_t n = g.node_count();
  detail::Mask alive(n, 1);
  std::vector<NodeId> rows(n);
  std::iota(rows.begin(), rows.end(), NodeId{0});
  while (rows.size() >= 2) {
    poll_deadline();
    Eigen::VectorXd depth = mahalanobis_depth(alive_features(g, alive, rows, opts.features));
    std::vector<NodeId> keep;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (depth(static_cast<Eigen::Index>(r)) < alpha) {
        alive[rows[r]] = 0;
      } else {
        keep.push_back(rows[r]);
      }
    }
    if (keep.size() == rows.size()) break;
    rows = std::move(keep);
  }
  return make_result("alphacore", {{"alpha", alpha}}, GroupingKind::ConnectedComponents,
                     detail::node_components(g, alive));
}

double degree_support(const Graph& g, NodeId u, NodeId v, double alpha) {
  double sup = static_cast<double>(edge_support(g, u, v));
  double edge_degree = static_cast<double>(std::min(g.degree(u), g.degree(v)));
  return std::max(sup + 2.0, alpha * edge_degree);
}

SubgraphResult k_core_truss(const Graph& g, unsigned k, double alpha) {
  if (k < 2) throw std::invalid_argument("k-core-truss requires k >= 2");
  if (!(alpha >= 0.0)) throw std::invalid_argument("k-core-truss requires alpha >= 0");
  const std::size_t m = g.edge_count();
  detail::Mask alive(m, 1), queued(m, 0);
  std::vector<std::uint32_t> sup(m, 0);
  std::vector<std::size_t> deg(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) deg[v] = g.degree(v);
  for (EdgeId e = 0; e < m; ++e) {
    const auto& [u, v] = g.edge(e);
    detail::for_common_neighbors(g, u, v, alive, [&](NodeId, EdgeId, EdgeId) { ++sup[e]; });
  }
  auto degsup = [&](EdgeId e) {
    const auto& [u, v] = g.edge(e);
    return std::max(sup[e] + 2.0, alpha * static_cast<double>(std::min(deg[u], deg[v])));
  };
  std::vector<EdgeId> stack;
  auto check = [&](EdgeId e) {
    if (!queued[e] && degsup(e) < k - kSlack) {
      queued[e] = 1;
      stack.push_back(e);
    }
  };
  for (EdgeId e = 0; e < m; ++e) check(e);
  while (!stack.empty()) {
    poll_deadline();
    EdgeId e = stack.back();
    stack.pop_back();
    const auto& [u, v] = g.edge(e);
    std::vector<EdgeId> touched;
    detail::for_common_neighbors(g, u, v, alive, [&](NodeId, EdgeId e1, EdgeId e2) {
      --sup[e1];
      --sup[e2];
      touched.push_back(e1);
      touched.push_back(e2);
    });
    alive[e] = 0;
    --deg[u];
    --deg[v];
    // Lower endpoint degrees can weaken every remaining edge at u and v.
    for (NodeId x : {u, v})
      for (EdgeId f : g.incident_edges(x))
        if (alive[f]) check(f);
    for (EdgeId f : touched) check(f);
  }
  return edges_result(g, "k-core-truss", {{"k", k}, {"alpha", alpha}}, alive);
}

SubgraphResult ks_core(const Graph& g, unsigned k, unsigned s) {
  if (k < 1) throw std::invalid_argument("(k,s)-core requires k >= 1");
  const std::size_t n = g.node_count();
  const unsigned start = std::max(k, s + 1);
  const auto core = core_decomposition(g);
  detail::Mask alive(n, 0);
  for (NodeId v = 0; v < n; ++v) alive[v] = core.values[v] >= start;

  // Support of each edge inside the alive subgraph.
  std::vector<std::uint32_t> sup(g.edge_count(), 0);
  std::vector<std::size_t> strong(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge(e);
    if (!alive[u] || !alive[v]) continue;
    detail::for_common_alive_nodes(g, u, v, alive, [&](NodeId, EdgeId, EdgeId) { ++sup[e]; });
    if (sup[e] >= s) {
      ++strong[u];
      ++strong[v];
    }
  }
  detail::Mask queued(n, 0);
  std::vector<NodeId> stack;
  auto check = [&](NodeId v) {
    if (alive[v] && !queued[v] && strong[v] < k) {
      queued[v] = 1;
      stack.push_back(v);
    }
  };
  for (NodeId v = 0; v < n; ++v) check(v);
  while (!stack.empty()) {
    poll_deadline();
    NodeId x = stack.back();
    stack.pop_back();
    alive[x] = 0;
    auto nb = g.neighbors(x);
    auto inc = g.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      NodeId y = nb[i];
      if (!alive[y]) continue;
      if (sup[inc[i]] >= s) --strong[y];
      // Triangles (x, y, z): edge (y, z) loses one; visit each once via z > y.
      detail::for_common_alive_nodes(g, x, y, alive, [&](NodeId z, EdgeId, EdgeId e_yz) {
        if (z < y) return;
        if (sup[e_yz]-- == s) {
          --strong[y];
          --strong[z];
          check(z);
        }
      });
      check(y);
    }
  }
  return make_result("ks-core", {{"k", k}, {"s", s}}, GroupingKind::ConnectedComponents,
                     detail::node_components(g, alive));
}

double structural_similarity(const Graph& g, NodeId u, NodeId v) {
  if (!g.valid(u) || !g.valid(v)) throw std::invalid_argument("node id out of range");
  if (u == v) return 1.0;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t common = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  if (g.has_edge(u, v)) common += 2;  // u ∈ Γ(v) and v ∈ Γ(u)
  return static_cast<double>(common) /
         std::sqrt(static_cast<double>(a.size() + 1) * static_cast<double>(b.size() + 1));
}

ScanOutput scan(const Graph& g, unsigned k, double epsilon) {
  if (k < 1) throw std::invalid_argument("SCAN requires k >= 1");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("SCAN requires 0 <= epsilon <= 1");
  const std::size_t n = g.node_count();
  detail::Mask similar(g.edge_count(), 0);
  std::vector<std::size_t> count(n, 1);  // v itself
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    poll_deadline();
    const auto& [u, v] = g.edge(e);
    if (structural_similarity(g, u, v) >= epsilon - 1e-12) {
      similar[e] = 1;
      ++count[u];
      ++count[v];
    }
  }
  detail::Mask is_core(n, 0);
  for (NodeId v = 0; v < n; ++v) is_core[v] = g.degree(v) > 0 && count[v] >= k;

  // Clusters: cores linked through similar core-core edges, seeded in id order.
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> seed(n, kNone);  // smallest core id of the cluster
  for (NodeId s = 0; s < n; ++s) {
    if (!is_core[s] || seed[s] != kNone) continue;
    std::vector<NodeId> stack{s};
    seed[s] = s;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      auto nb = g.neighbors(x);
      auto inc = g.incident_edges(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (similar[inc[i]] && is_core[nb[i]] && seed[nb[i]] == kNone) {
          seed[nb[i]] = s;
          stack.push_back(nb[i]);
        }
      }
    }
  }
  std::vector<std::uint32_t> home(seed);
  for (NodeId v = 0; v < n; ++v) {
    if (is_core[v]) continue;
    auto nb = g.neighbors(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (similar[inc[i]] && is_core[nb[i]]) {
        home[v] = seed[nb[i]];
        break;  // neighbors ascend, so this is the smallest similar core
      }
    }
  }
  std::vector<NodeSet> clusters;
  std::vector<std::uint32_t> slot(n, kNone);
  for (NodeId v = 0; v < n; ++v) {
    if (home[v] == kNone) continue;
    if (slot[home[v]] == kNone) {
      slot[home[v]] = static_cast<std::uint32_t>(clusters.size());
      clusters.emplace_back();
    }
    clusters[slot[home[v]]].push_back(v);
  }
  ScanOutput out;
  out.result = make_result("scan", {{"k", k}, {"epsilon", epsilon}}, GroupingKind::Clusters, std::move(clusters));
  out.labels.roles.assign(n, ScanRole::Outlier);
  out.labels.cluster.assign(n, std::nullopt);
  const auto& groups = out.result.groups;
  for (std::uint32_t c = 0; c < groups.size(); ++c) {
    for (NodeId v : groups[c]) {
      out.labels.roles[v] = is_core[v] ? ScanRole::Core : ScanRole::Border;
      out.labels.cluster[v] = c;
    }
  }
  return out;
}

}  // namespace cohesive
