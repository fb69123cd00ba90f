#include <doctest.h>

#include <chrono>
#include <random>
#include <sstream>

#include "cohesive/deadline.hpp"
#include "cohesive/toolkit.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cohesive;

TEST_CASE("registry and default sweeps") {
  const auto& models = registered_models();
  CHECK(models.size() == 14);
  CHECK(default_sweep("k-core") == std::vector<ParamMap>{{{"k", 3}}, {{"k", 5}}, {{"k", 7}}, {{"k", 9}}});
  CHECK(default_sweep("k-truss") == std::vector<ParamMap>{{{"k", 4}}, {{"k", 6}}, {{"k", 8}}, {{"k", 10}}});
  auto ks = default_sweep("ks-core");
  REQUIRE(ks.size() == 8);
  CHECK(ks[0] == ParamMap{{"k", 3}, {"s", 2}});
  CHECK(ks[3] == ParamMap{{"k", 3}, {"s", 5}});
  CHECK(ks[7] == ParamMap{{"k", 5}, {"s", 5}});
  CHECK(default_sweep("alphacore") ==
        std::vector<ParamMap>{{{"alpha", 0.2}}, {{"alpha", 0.4}}, {{"alpha", 0.6}}, {{"alpha", 0.8}}});
  for (const auto& p : default_sweep("k-core-truss")) CHECK(p.at("alpha") == 1.0);
  CHECK(default_sweep("scan").size() == 8);
  CHECK(q3_params("kp-core") == ParamMap{{"k", 3}, {"p", 0.6}});
  CHECK_THROWS_AS(default_sweep("nope"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  auto g = toy_graph();
  CHECK_THROWS_AS(run_registered(g, "k-core", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_registered(g, "k-core", {{"k", 2.5}}), std::invalid_argument);
  CHECK_THROWS_AS(run_registered(g, "k-core", {{"k", 2}, {"p", 0.1}}), std::invalid_argument);
  CHECK_THROWS_AS(run_registered(g, "kp-core", {{"k", 2}, {"p", 1.1}}), std::invalid_argument);
  CHECK_THROWS_AS(run_registered(g, "alphacore", {{"alpha", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(run_registered(g, "k-truss", {{"k", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(run_registered(g, "unknown", {{"k", 1}}), std::invalid_argument);
}

TEST_CASE("every model runs its grid on the toy network") {
  auto g = toy_graph();
  for (const auto& m : registered_models())
    for (const auto& p : m.sweep) CHECK_NOTHROW(run_registered(g, m.id, p));
}

TEST_CASE("run_model on the toy file") {
  RunConfig cfg;
  cfg.input_path = data_path("toy.txt");
  cfg.model = "k-core";
  cfg.params = {{"k", 3}};
  cfg.metric_levels = {MetricLevel::Global, MetricLevel::Local};
  auto out = run_model(cfg);
  CHECK(out.result.groups.size() == 1);
  CHECK(out.result.groups[0].size() == 11);
  CHECK(out.metrics.size() == 2);

  cfg.model = "k-truss";
  cfg.params = {{"k", 4}};
  CHECK(run_model(cfg).result.groups.size() == 2);

  cfg.model = "k-core";
  cfg.params = {{"k", 99}};
  auto empty = run_model(cfg);
  CHECK(empty.result.empty());
  auto loaded = load_edge_list_file(cfg.input_path);
  CHECK(render_report(loaded.graph, empty).find("\"groups\": []") != std::string::npos);
}

TEST_CASE("reports are deterministic and round-trip") {
  RunConfig cfg;
  cfg.input_path = data_path("toy.txt");
  cfg.metric_levels = {MetricLevel::Global, MetricLevel::Local};
  cfg.truth_path = data_path("toy_truth.txt");
  auto g = load_edge_list_file(cfg.input_path).graph;
  for (const auto& m : registered_models()) {
    cfg.model = m.id;
    cfg.params = m.sweep.front();
    std::string a, b;
    try {
      a = render_report(g, run_model(cfg));
      b = render_report(g, run_model(cfg));
    } catch (const UndefinedScore&) {
      continue;  // empty result: no query node
    }
    CHECK(a == b);
    auto back = parse_report(a, g);
    auto direct = run_registered(g, m.id, cfg.params);
    CHECK(back.groups == direct.groups);
    CHECK(back.model == m.id);
    CHECK(back.params == direct.params);
    CHECK(back.kind == direct.kind);
  }
}

TEST_CASE("fnv1a digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("bench cardinality and CSV") {
  std::vector<Dataset> ds{{"toy", toy_graph()}, {"k6", complete_graph(6)}};
  BenchOptions opts;
  opts.sweep = true;
  opts.repeat = 1;
  auto records = bench(ds, {"k-core", "k-truss"}, opts);
  CHECK(records.size() == 16);
  CHECK(records.front().dataset == "toy");
  CHECK(records.front().model == "k-core");
  CHECK(records.back().dataset == "k6");
  for (const auto& r : records) {
    CHECK(r.status == BenchStatus::Ok);
    CHECK(r.group_count.has_value());
    CHECK(r.seconds >= 0.0);
  }
  std::ostringstream csv;
  write_bench_csv(csv, records);
  const std::string text = csv.str();
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 17);
  CHECK(csv.str().rfind("dataset,model,params,", 0) == 0);

  opts.sweep = false;
  auto q3 = bench(ds, {"scan"}, opts);
  REQUIRE(q3.size() == 2);
  CHECK(q3[0].params == ParamMap{{"k", 3}, {"epsilon", 0.6}});
}

TEST_CASE("clique budget becomes a status row") {
  std::vector<Dataset> ds{{"toy", toy_graph()}};
  BenchOptions opts;
  opts.repeat = 1;
  opts.limits.max_cliques = 2;
  auto records = bench(ds, {"clique", "k-core"}, opts);
  REQUIRE(records.size() == 2);
  CHECK(records[0].status == BenchStatus::BudgetExceeded);
  CHECK_FALSE(records[0].group_count.has_value());
  CHECK(records[1].status == BenchStatus::Ok);
}

TEST_CASE("time budgets are enforced") {
  std::mt19937_64 rng(53);
  std::vector<Dataset> ds{{"dense", oracle::random_graph(300, 0.3, rng)}};
  BenchOptions opts;
  opts.repeat = 1;
  opts.budget = 0.25;
  auto start = std::chrono::steady_clock::now();
  auto records = bench(ds, {"k-vcc"}, opts);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == BenchStatus::Timeout);
  CHECK_FALSE(records[0].group_count.has_value());
  CHECK(records[0].seconds <= 2 * opts.budget);
  CHECK(elapsed <= 2 * opts.budget);

  DeadlineScope outer(std::chrono::duration<double>(100.0));
  auto t0 = std::chrono::steady_clock::now();
  CHECK_THROWS_AS(
      {
        DeadlineScope inner(std::chrono::duration<double>(0.05));
        while (true) poll_deadline();
      },
      Timeout);
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 0.1 * 2 + 0.05);
  CHECK_NOTHROW(poll_deadline());
}
