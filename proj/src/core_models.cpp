#include "cohesive/core_models.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohesive/deadline.hpp"
#include "detail.hpp"

namespace cohesive {

namespace {

// Coreness restricted to alive nodes; dead nodes get 0.
std::vector<std::uint32_t> core_numbers(const Graph& g, const detail::Mask& alive) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> deg(n, 0);
  std::uint32_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (NodeId w : g.neighbors(v)) deg[v] += alive[w] ? 1 : 0;
    max_deg = std::max(max_deg, deg[v]);
  }
  // Bin sort by degree; pos/vert give each node's slot.
  std::vector<std::size_t> bin(max_deg + 2, 0);
  std::vector<NodeId> vert;
  vert.reserve(n);
  for (NodeId v = 0; v < n; ++v)
    if (alive[v]) ++bin[deg[v] + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  std::vector<std::size_t> pos(n, 0);
  vert.resize(bin.back());
  {
    auto next = bin;
    for (NodeId v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      pos[v] = next[deg[v]]++;
      vert[pos[v]] = v;
    }
  }
  for (std::size_t i = 0; i < vert.size(); ++i) {
    poll_deadline();
    NodeId v = vert[i];
    for (NodeId u : g.neighbors(v)) {
      if (!alive[u] || deg[u] <= deg[v]) continue;
      // Move u to the front of its bin, then shrink it by one.
      std::uint32_t du = deg[u];
      std::size_t pu = pos[u];
      std::size_t pw = bin[du];
      NodeId w = vert[pw];
      if (u != w) {
        std::swap(vert[pu], vert[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return deg;
}

SubgraphResult node_result(const Graph& g, const char* model, ParamMap params, const detail::Mask& keep) {
  return make_result(model, std::move(params), GroupingKind::ConnectedComponents,
                     detail::node_components(g, keep));
}

}  // namespace

std::uint32_t CorenessLabels::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

CorenessLabels core_decomposition(const Graph& g) {
  detail::Mask alive(g.node_count(), 1);
  return {core_numbers(g, alive)};
}

SubgraphResult k_core(const Graph& g, unsigned k) {
  const auto core = core_decomposition(g);
  detail::Mask keep(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) keep[v] = core.values[v] >= k;
  return node_result(g, "k-core", {{"k", k}}, keep);
}

SubgraphResult kh_core(const Graph& g, unsigned k, unsigned h) {
  if (h == 0) throw std::invalid_argument("(k,h)-core requires h >= 1");
  const std::size_t n = g.node_count();
  detail::Mask alive(n, 1);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<NodeId> frontier, next;

  // Visits nodes within distance h of src through nodes passing `through`;
  // returns how many were reached (src excluded). Stops early at `limit`.
  auto reach = [&](NodeId src, const detail::Mask& through, std::size_t limit, auto&& visit) {
    ++epoch;
    stamp[src] = epoch;
    frontier.assign(1, src);
    std::size_t count = 0;
    for (unsigned depth = 0; depth < h && !frontier.empty(); ++depth) {
      next.clear();
      for (NodeId x : frontier) {
        for (NodeId y : g.neighbors(x)) {
          if (!through[y] || stamp[y] == epoch) continue;
          stamp[y] = epoch;
          visit(y);
          if (++count >= limit) return count;
          next.push_back(y);
        }
      }
      frontier.swap(next);
    }
    return count;
  };

  std::vector<NodeId> dirty(n);
  for (NodeId v = 0; v < n; ++v) dirty[v] = v;
  detail::Mask queued(n, 0);
  std::vector<NodeId> doomed;
  while (!dirty.empty()) {
    poll_deadline();
    doomed.clear();
    for (NodeId v : dirty) {
      queued[v] = 0;
      if (!alive[v]) continue;
      if (reach(v, alive, k, [](NodeId) {}) < k) doomed.push_back(v);
    }
    dirty.clear();
    if (doomed.empty()) break;
    // Anything within h of a doomed node (in the graph before this round's
    // removals) may have lost reach.
    for (NodeId v : doomed) {
      reach(v, alive, n, [&](NodeId y) {
        if (!queued[y]) {
          queued[y] = 1;
          dirty.push_back(y);
        }
      });
    }
    for (NodeId v : doomed) alive[v] = 0;
    std::sort(dirty.begin(), dirty.end());
  }
  return node_result(g, "kh-core", {{"k", k}, {"h", h}}, alive);
}

SubgraphResult kp_core(const Graph& g, unsigned k, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("(k,p)-core requires 0 <= p <= 1");
  const std::size_t n = g.node_count();
  detail::Mask alive(n, 1);
  std::vector<std::size_t> deg(n);
  for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
  auto fails = [&](NodeId v) {
    if (deg[v] < k) return true;
    // deg_H / deg_G >= p, with slack for products like 0.6 * 5
    return static_cast<double>(deg[v]) < p * static_cast<double>(g.degree(v)) - 1e-9;
  };
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < n; ++v) {
    if (fails(v)) {
      alive[v] = 0;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    poll_deadline();
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(v)) {
      if (!alive[w]) continue;
      --deg[w];
      if (fails(w)) {
        alive[w] = 0;
        stack.push_back(w);
      }
    }
  }
  return node_result(g, "kp-core", {{"k", k}, {"p", p}}, alive);
}

ContourLabels peak_decomposition(const Graph& g) {
  const std::size_t n = g.node_count();
  ContourLabels out{std::vector<std::uint32_t>(n, 0)};
  detail::Mask alive(n, 1);
  std::size_t remaining = n;
  while (remaining > 0) {
    auto core = core_numbers(g, alive);
    std::uint32_t top = 0;
    for (NodeId v = 0; v < n; ++v)
      if (alive[v]) top = std::max(top, core[v]);
    if (top == 0) break;  // leftovers are isolated: contour 0
    for (NodeId v = 0; v < n; ++v) {
      if (alive[v] && core[v] == top) {
        out.values[v] = top;
        alive[v] = 0;
        --remaining;
      }
    }
  }
  return out;
}

SubgraphResult k_peak(const Graph& g, unsigned k) {
  const auto contour = peak_decomposition(g);
  detail::Mask keep(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) keep[v] = contour.values[v] >= k;
  return node_result(g, "k-peak", {{"k", k}}, keep);
}

}  // namespace cohesive
