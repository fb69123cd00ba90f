#include "cohesive/triangle_models.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohesive/deadline.hpp"
#include "detail.hpp"

namespace cohesive {

namespace {

std::vector<std::uint32_t> supports(const Graph& g, const detail::Mask& edge_alive) {
  std::vector<std::uint32_t> sup(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!edge_alive[e]) continue;
    poll_deadline();
    const auto& [u, v] = g.edge(e);
    detail::for_common_neighbors(g, u, v, edge_alive, [&](NodeId, EdgeId, EdgeId) { ++sup[e]; });
  }
  return sup;
}

// Trussness of alive edges; dead edges get 0. Consumes a copy of the mask.
std::vector<std::uint32_t> trussness(const Graph& g, detail::Mask alive) {
  const std::size_t m = g.edge_count();
  auto sup = supports(g, alive);
  std::uint32_t max_sup = 0;
  std::size_t live = 0;
  for (EdgeId e = 0; e < m; ++e) {
    if (!alive[e]) continue;
    max_sup = std::max(max_sup, sup[e]);
    ++live;
  }
  // Bucket queue over support, same layout as the core peel.
  std::vector<std::size_t> bin(max_sup + 2, 0);
  for (EdgeId e = 0; e < m; ++e)
    if (alive[e]) ++bin[sup[e] + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  std::vector<std::size_t> pos(m, 0);
  std::vector<EdgeId> order(live);
  {
    auto next = bin;
    for (EdgeId e = 0; e < m; ++e) {
      if (!alive[e]) continue;
      pos[e] = next[sup[e]]++;
      order[pos[e]] = e;
    }
  }
  auto lower = [&](EdgeId f, std::uint32_t floor) {
    if (sup[f] <= floor) return;
    std::uint32_t s = sup[f];
    std::size_t pf = pos[f];
    std::size_t pw = bin[s];
    EdgeId w = order[pw];
    if (f != w) {
      std::swap(order[pf], order[pw]);
      pos[f] = pw;
      pos[w] = pf;
    }
    ++bin[s];
    --sup[f];
  };
  std::vector<std::uint32_t> out(m, 0);
  for (std::size_t i = 0; i < live; ++i) {
    poll_deadline();
    EdgeId e = order[i];
    const auto& [u, v] = g.edge(e);
    std::uint32_t level = sup[e];
    detail::for_common_neighbors(g, u, v, alive, [&](NodeId, EdgeId e1, EdgeId e2) {
      lower(e1, level);
      lower(e2, level);
    });
    alive[e] = 0;
    out[e] = level + 2;
  }
  return out;
}

SubgraphResult edge_result(const Graph& g, const char* model, unsigned k, const detail::Mask& keep) {
  return make_result(model, {{"k", k}}, GroupingKind::ConnectedComponents, detail::edge_components(g, keep));
}

}  // namespace

std::uint32_t TrussnessLabels::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

TrussnessLabels truss_decomposition(const Graph& g) {
  return {trussness(g, detail::Mask(g.edge_count(), 1))};
}

SubgraphResult k_truss(const Graph& g, unsigned k) {
  if (k < 2) throw std::invalid_argument("k-truss requires k >= 2");
  const std::size_t m = g.edge_count();
  detail::Mask alive(m, 1);
  auto sup = supports(g, alive);
  const std::uint32_t need = k - 2;
  detail::Mask queued(m, 0);
  std::vector<EdgeId> stack;
  for (EdgeId e = 0; e < m; ++e) {
    if (sup[e] < need) {
      queued[e] = 1;
      stack.push_back(e);
    }
  }
  // An edge is dead only once popped, so each triangle is discounted
  // exactly once, by whichever of its edges goes first.
  while (!stack.empty()) {
    poll_deadline();
    EdgeId e = stack.back();
    stack.pop_back();
    const auto& [u, v] = g.edge(e);
    detail::for_common_neighbors(g, u, v, alive, [&](NodeId, EdgeId e1, EdgeId e2) {
      for (EdgeId f : {e1, e2}) {
        if (--sup[f] < need && !queued[f]) {
          queued[f] = 1;
          stack.push_back(f);
        }
      }
    });
    alive[e] = 0;
  }
  return edge_result(g, "k-truss", k, alive);
}

TricontourLabels tripeak_decomposition(const Graph& g) {
  const std::size_t m = g.edge_count();
  TricontourLabels out{std::vector<std::uint32_t>(m, 2)};
  detail::Mask alive(m, 1);
  std::size_t remaining = m;
  while (remaining > 0) {
    auto truss = trussness(g, alive);
    std::uint32_t top = 0;
    for (EdgeId e = 0; e < m; ++e)
      if (alive[e]) top = std::max(top, truss[e]);
    if (top <= 2) break;
    for (EdgeId e = 0; e < m; ++e) {
      if (alive[e] && truss[e] == top) {
        out.values[e] = top;
        alive[e] = 0;
        --remaining;
      }
    }
  }
  return out;
}

SubgraphResult k_tripeak(const Graph& g, unsigned k) {
  if (k < 2) throw std::invalid_argument("k-tripeak requires k >= 2");
  const auto contour = tripeak_decomposition(g);
  detail::Mask keep(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) keep[e] = contour.values[e] >= k;
  return edge_result(g, "k-tripeak", k, keep);
}

}  // namespace cohesive
