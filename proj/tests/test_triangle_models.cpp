#include <doctest.h>

#include <random>

#include "cohesive/core_models.hpp"
#include "cohesive/triangle_models.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cohesive;

namespace {

std::uint32_t edge_label(const Graph& g, const std::vector<std::uint32_t>& values, int a, int b) {
  return values[*g.find_edge(static_cast<NodeId>(a - 1), static_cast<NodeId>(b - 1))];
}

}  // namespace

TEST_CASE("truss_decomposition") {
  auto g = toy_graph();
  auto t = truss_decomposition(g);
  for (int a = 6; a <= 10; ++a)
    for (int b = a + 1; b <= 10; ++b) CHECK(edge_label(g, t.values, a, b) == 5);
  CHECK(edge_label(g, t.values, 4, 6) == 3);
  CHECK(t.max() == 5);
  for (auto v : truss_decomposition(complete_graph(3)).values) CHECK(v == 3);
}

TEST_CASE("k_truss") {
  auto g = toy_graph();
  CHECK(k_truss(g, 3).groups == groups({toy_range(1, 13)}));
  CHECK(k_truss(g, 4).groups == groups({toy({2, 3, 4, 5}), toy({6, 7, 8, 9, 10, 12, 13})}));
  CHECK(k_truss(g, 2).node_union() == toy_range(1, 13));
  CHECK(k_truss(path_graph(3), 2).groups.size() == 1);
  CHECK(k_truss(path_graph(3), 3).empty());
  CHECK_THROWS_AS(k_truss(g, 1), std::invalid_argument);
}

TEST_CASE("tripeak_decomposition and k_tripeak") {
  auto g = toy_graph();
  auto c = tripeak_decomposition(g);
  for (int a = 6; a <= 10; ++a)
    for (int b = a + 1; b <= 10; ++b) CHECK(edge_label(g, c.values, a, b) == 5);
  for (int a = 2; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) CHECK(edge_label(g, c.values, a, b) == 4);
  CHECK(edge_label(g, c.values, 6, 12) == 2);
  for (auto v : tripeak_decomposition(complete_graph(3)).values) CHECK(v == 3);

  CHECK(k_tripeak(g, 4).groups == groups({toy({2, 3, 4, 5}), toy_range(6, 10)}));
  CHECK(k_tripeak(g, 5).groups == groups({toy_range(6, 10)}));
  CHECK(k_tripeak(complete_graph(4), 4).node_union() == NodeSet{0, 1, 2, 3});
}

TEST_CASE("triangle-model properties on random graphs") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 80; ++iter) {
    auto g = oracle::random_small_graph(1, 25, rng);
    auto t = truss_decomposition(g);
    auto c = tripeak_decomposition(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(t.values[e] <= edge_support(g, g.edge(e).u, g.edge(e).v) + 2);
      CHECK(c.values[e] <= t.values[e]);
    }
    for (unsigned k = 2; k <= t.max() + 1; ++k) {
      auto r = k_truss(g, k);
      auto nodes = r.node_union();
      CHECK(oracle::subset(k_truss(g, k + 1).node_union(), nodes));
      CHECK(oracle::subset(k_tripeak(g, k).node_union(), nodes));
      CHECK(oracle::subset(nodes, k_core(g, k - 1).node_union()));
      // Surviving edges: exactly those with trussness >= k.
      std::size_t kept = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) kept += t.values[e] >= k;
      auto expected = oracle::k_truss_edges(g, k);
      CHECK(kept == expected.size());
      for (const auto& e : expected) CHECK(t.values[*g.find_edge(e.u, e.v)] >= k);
      // Each kept edge has >= k-2 common neighbours among kept edges.
      for (const auto& e : expected) {
        std::size_t common = 0;
        for (NodeId w = 0; w < g.node_count(); ++w) {
          auto has = [&](NodeId a, NodeId b) {
            cohesive::Edge x{std::min(a, b), std::max(a, b)};
            return std::find(expected.begin(), expected.end(), x) != expected.end();
          };
          if (has(e.u, w) && has(e.v, w)) ++common;
        }
        CHECK(common + 2 >= k);
      }
    }
  }
}

TEST_CASE("k_truss matches the cascading-check oracle") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 80; ++iter) {
    auto g = oracle::random_small_graph(1, 10, rng);
    for (unsigned k = 2; k <= 6; ++k) {
      auto edges = oracle::k_truss_edges(g, k);
      NodeSet nodes;
      for (const auto& e : edges) {
        nodes.push_back(e.u);
        nodes.push_back(e.v);
      }
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      CHECK(k_truss(g, k).node_union() == nodes);
    }
  }
}
