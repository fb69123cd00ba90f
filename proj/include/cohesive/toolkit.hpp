#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cohesive/clique_models.hpp"
#include "cohesive/graph.hpp"
#include "cohesive/metrics.hpp"
#include "cohesive/result.hpp"

namespace cohesive {

inline constexpr std::string_view kToolkitVersion = "1.0.0";

struct ParamSpec {
  std::string name;
  bool integer = true;
  double min = 0;
  double max = 1e18;
  bool min_exclusive = false;
};

struct ModelInfo {
  std::string id;
  std::vector<ParamSpec> params;
  std::vector<ParamMap> sweep;  // q1..q4 (and a second row where defined)
};

/// The fourteen models, in a fixed order.
const std::vector<ModelInfo>& registered_models();
// Throws std::invalid_argument for unknown ids.
const ModelInfo& model_info(std::string_view id);

/// Checks that params has exactly the model's parameters with legal values.
void validate_params(const ModelInfo& info, const ParamMap& params);

/// The model's parameter grid over q1..q4; models with two rows return eight
/// settings, first row first.
std::vector<ParamMap> default_sweep(std::string_view model);

/// The q3 setting of the first grid row.
ParamMap q3_params(std::string_view model);

/// Validates and dispatches to the model implementation.
SubgraphResult run_registered(const Graph& g, std::string_view model, const ParamMap& params,
                              const CliqueOptions& budget = {});

struct RunConfig {
  std::string model;
  ParamMap params;
  std::string input_path;
  std::string output_path;                 // empty: caller decides
  std::vector<MetricLevel> metric_levels;  // reports to attach
  std::optional<std::string> truth_path;
  double time_budget = 0;                  // seconds; 0 = unlimited
  CliqueOptions budget;
};

struct Provenance {
  std::string input_digest;  // FNV-1a 64-bit of the input bytes, hex
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
};

struct RunOutput {
  SubgraphResult result;
  std::vector<MetricReport> metrics;
  std::optional<AccuracyScores> accuracy;
  Provenance provenance;
};

std::string fnv1a_hex(std::string_view bytes);
std::string read_file(const std::string& path);

/// Runs the configured model with the configured budgets on an already
/// loaded graph; `digest` is recorded as provenance.
RunOutput run_model(const Graph& g, const RunConfig& config, std::string digest = {});
/// Loads config.input_path and runs.
RunOutput run_model(const RunConfig& config);

/// Structured JSON report; groups use original labels. Byte-identical for
/// identical inputs.
std::string render_report(const Graph& g, const RunOutput& out);

/// Reads the groups, model and parameters back from a rendered report.
SubgraphResult parse_report(std::string_view text, const Graph& g);

std::string render_metrics(const MetricReport& report);
std::string render_accuracy(const AccuracyScores& scores);

enum class BenchStatus { Ok, Timeout, BudgetExceeded, Error };
std::string_view to_string(BenchStatus status);

struct BenchRecord {
  std::string model;
  ParamMap params;
  std::string dataset;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double seconds = 0;  // median over repeats
  std::optional<std::size_t> group_count;
  std::optional<std::size_t> union_size;
  BenchStatus status = BenchStatus::Ok;
};

struct BenchOptions {
  bool sweep = false;      // all grid settings instead of q3 only
  unsigned repeat = 3;
  double budget = 0;       // seconds per run; 0 = unlimited
  CliqueOptions limits;
};

struct Dataset {
  std::string name;
  Graph graph;
};

/// Times every (dataset, model, params) cell. Failures become status rows.
/// Records are in (dataset, model, params) input order.
std::vector<BenchRecord> bench(const std::vector<Dataset>& datasets, const std::vector<std::string>& models,
                               const BenchOptions& options);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// "k=3;p=0.5" in parameter-name order.
std::string format_params(const ParamMap& params);

}  // namespace cohesive
