#include <doctest.h>

#include <random>

#include "cohesive/core_models.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cohesive;

TEST_CASE("core_decomposition on the toy network") {
  auto c = core_decomposition(toy_graph());
  for (int v : {2, 3, 4, 5, 12, 13}) CHECK(c.values[v - 1] == 3);
  for (int v : {1, 11}) CHECK(c.values[v - 1] == 2);
  for (int v : {6, 7, 8, 9, 10}) CHECK(c.values[v - 1] == 4);
  CHECK(c.max() == 4);

  GraphBuilder b;
  b.add_node("lonely");
  CHECK(core_decomposition(std::move(b).build()).values == std::vector<std::uint32_t>{0});
}

TEST_CASE("k_core") {
  auto g = toy_graph();
  CHECK(k_core(g, 2).groups == groups({toy_range(1, 13)}));
  CHECK(k_core(g, 3).groups == groups({toy_range(2, 13, {11})}));
  CHECK(k_core(complete_graph(3), 3).empty());
  CHECK(k_core(g, 99).empty());
  CHECK(k_core(g, 3).model == "k-core");
}

TEST_CASE("kh_core") {
  auto g = toy_graph();
  CHECK(kh_core(g, 8, 2).groups == groups({toy({4, 5, 6, 7, 8, 9, 10, 12, 13})}));
  // Distances in the surviving subgraph; see the notes on this example in README.
  CHECK(kh_core(g, 5, 2).groups == groups({toy_range(4, 13)}));
  CHECK_THROWS_AS(kh_core(g, 2, 0), std::invalid_argument);
}

TEST_CASE("kp_core") {
  auto g = toy_graph();
  CHECK(kp_core(g, 3, 0.5).groups == groups({toy_range(2, 13, {11})}));
  CHECK(kp_core(g, 3, 0.8).empty());
  CHECK(kp_core(g, 3, 0.76).empty());
  CHECK(kp_core(g, 3, 0.75).groups == kp_core(g, 3, 0.5).groups);
  CHECK_THROWS_AS(kp_core(g, 3, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(kp_core(g, 3, -0.1), std::invalid_argument);
}

TEST_CASE("peak_decomposition and k_peak") {
  auto g = toy_graph();
  auto c = peak_decomposition(g);
  for (int v : {6, 7, 8, 9, 10}) CHECK(c.values[v - 1] == 4);
  for (int v : {2, 3, 4, 5}) CHECK(c.values[v - 1] == 3);
  for (int v : {1, 11, 12, 13}) CHECK(c.values[v - 1] == 0);
  CHECK(k_peak(g, 3).groups == groups({toy_range(2, 10)}));
  CHECK(k_peak(g, 4).groups == groups({toy_range(6, 10)}));
  CHECK(k_peak(g, 0).node_union() == toy_range(1, 13));

  auto k5 = complete_graph(5);
  for (auto v : peak_decomposition(k5).values) CHECK(v == 4);
}

TEST_CASE("core-model properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 80; ++iter) {
    auto g = oracle::random_small_graph(1, 30, rng);
    auto core = core_decomposition(g);
    auto contour = peak_decomposition(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      CHECK(core.values[v] <= g.degree(v));
      CHECK(contour.values[v] <= core.values[v]);
    }
    for (unsigned k = 0; k <= core.max() + 1; ++k) {
      auto r = k_core(g, k);
      auto nodes = r.node_union();
      auto in = [&](NodeId v) { return std::binary_search(nodes.begin(), nodes.end(), v); };
      for (NodeId v : nodes) {
        std::size_t d = 0;
        for (NodeId w : g.neighbors(v)) d += in(w);
        CHECK(d >= k);
      }
      for (NodeId v = 0; v < g.node_count(); ++v)
        CHECK(in(v) == (core.values[v] >= k && g.degree(v) > 0));
      CHECK(oracle::subset(k_core(g, k + 1).node_union(), nodes));
      CHECK(oracle::subset(k_peak(g, k).node_union(), nodes));
      CHECK(kp_core(g, k, 0.0).groups == r.groups);
      CHECK(kh_core(g, k, 1).groups == r.groups);
      for (auto [p, q] : {std::pair{0.2, 0.5}, {0.5, 0.8}})
        CHECK(oracle::subset(kp_core(g, k, q).node_union(), kp_core(g, k, p).node_union()));
      CHECK(oracle::subset(kh_core(g, k, 2).node_union(), kh_core(g, k, 3).node_union()));
      for (const auto& grp : r.groups) CHECK(connected_components(g, grp).size() == 1);
    }
  }
}

TEST_CASE("k_core matches exhaustive subset search") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 60; ++iter) {
    auto g = oracle::random_small_graph(1, 8, rng);
    for (unsigned k = 0; k <= 5; ++k) CHECK(k_core(g, k).node_union() == oracle::k_core_nodes(g, k));
  }
}
