#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "cohesive/core_models.hpp"
#include "cohesive/deadline.hpp"
#include "cohesive/metrics.hpp"
#include "cohesive/toolkit.hpp"
#include "cohesive/triangle_models.hpp"

using namespace cohesive;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void warn_load(const LoadReport& r) {
  if (r.self_loops_dropped) std::cerr << "warning: dropped " << r.self_loops_dropped << " self-loop(s)\n";
}

LoadedGraph load(const std::string& path) {
  auto loaded = load_edge_list(read_file(path));
  warn_load(loaded.report);
  return loaded;
}

// Graph holding only the labels of a report and truth file, padded to the
// report's recorded node count, for scoring without the original input.
Graph label_universe(const std::string& report_text, const std::string& truth_text) {
  auto j = nlohmann::json::parse(report_text);
  GraphBuilder b;
  for (const auto& grp : j.at("groups"))
    for (const auto& label : grp) b.add_node(label.get<std::string>());
  std::istringstream in(truth_text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string tok;
    if (tokens >> tok && tok[0] != '#') {
      do b.add_node(tok);
      while (tokens >> tok);
    }
  }
  Graph partial = std::move(b).build();
  std::size_t n = partial.node_count();
  if (j.contains("provenance")) n = std::max<std::size_t>(n, j["provenance"].value("node_count", 0));
  GraphBuilder padded;
  for (const auto& l : partial.labels()) padded.add_node(l);
  for (std::size_t i = partial.node_count(); i < n; ++i) padded.add_node("\x1f" + std::to_string(i));
  return std::move(padded).build();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohesive subgraph discovery toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));

  // compute
  auto* compute = app.add_subcommand("compute", "Run one model and write a JSON report");
  std::string model, input, output, truth;
  std::vector<std::string> levels;
  double budget = 0;
  std::size_t max_cliques = CliqueOptions{}.max_cliques;
  std::map<std::string, double> raw;
  compute->add_option("--model", model, "Model id")->required();
  compute->add_option("--input", input, "Edge-list file")->required();
  compute->add_option("--output", output, "Report path (default: stdout)");
  for (const char* p : {"k", "h", "p", "s", "alpha", "epsilon"}) {
    compute->add_option_function<double>(std::string("--") + p, [&raw, p](double v) { raw[p] = v; },
                                         std::string("Model parameter ") + p);
  }
  compute->add_option("--metrics", levels, "Metric levels to attach")
      ->check(CLI::IsMember({"global", "local"}))
      ->delimiter(',');
  compute->add_option("--truth", truth, "Ground-truth communities for accuracy scores");
  compute->add_option("--budget", budget, "Time budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
  compute->add_option("--max-cliques", max_cliques, "Clique enumeration limit");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Print per-node or per-edge decomposition labels");
  std::string kind;
  decompose->add_option("--kind", kind, "core | truss | peak | tripeak")
      ->required()
      ->check(CLI::IsMember({"core", "truss", "peak", "tripeak"}));
  decompose->add_option("--input", input, "Edge-list file")->required();
  decompose->add_option("--output", output, "Output path (default: stdout)");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Evaluate a saved report");
  std::string level, result_path;
  metrics->add_option("--level", level, "local | global")->required()->check(CLI::IsMember({"local", "global"}));
  metrics->add_option("--result", result_path, "Report produced by compute")->required();
  metrics->add_option("--input", input, "Edge-list file the report was computed on")->required();

  // community-eval
  auto* ceval = app.add_subcommand("community-eval", "Score a saved report against ground truth");
  ceval->add_option("--result", result_path, "Report produced by compute")->required();
  ceval->add_option("--truth", truth, "Ground-truth communities")->required();
  ceval->add_option("--input", input, "Edge-list file (optional; otherwise the report's node count is used)");

  // bench
  auto* benchcmd = app.add_subcommand("bench", "Time models over datasets and write CSV");
  std::vector<std::string> inputs, models;
  bool sweep = false;
  unsigned repeat = 3;
  std::string out_csv;
  benchcmd->add_option("--inputs", inputs, "Edge-list files")->required()->delimiter(',');
  benchcmd->add_option("--models", models, "Model ids")->required()->delimiter(',');
  benchcmd->add_flag("--sweep", sweep, "Run the full q1..q4 grid instead of q3");
  benchcmd->add_option("--repeat", repeat, "Runs per cell; the median is reported")->check(CLI::PositiveNumber);
  benchcmd->add_option("--budget", budget, "Per-run time budget in seconds")->check(CLI::NonNegativeNumber);
  benchcmd->add_option("--max-cliques", max_cliques, "Clique enumeration limit");
  benchcmd->add_option("--out", out_csv, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) {
      RunConfig cfg;
      cfg.model = model;
      cfg.input_path = input;
      cfg.output_path = output;
      const auto& info = model_info(model);
      for (const auto& [name, value] : raw) {
        bool known = std::any_of(info.params.begin(), info.params.end(),
                                 [&](const ParamSpec& s) { return s.name == name; });
        if (!known) throw UsageError(model + " takes no --" + name);
        cfg.params[name] = value;
      }
      validate_params(info, cfg.params);
      for (const auto& l : levels) cfg.metric_levels.push_back(l == "global" ? MetricLevel::Global : MetricLevel::Local);
      if (!truth.empty()) cfg.truth_path = truth;
      cfg.time_budget = budget;
      cfg.budget.max_cliques = max_cliques;
      const std::string text = read_file(input);
      auto loaded = load_edge_list(text);
      warn_load(loaded.report);
      auto out = run_model(loaded.graph, cfg, fnv1a_hex(text));
      emit(output, render_report(loaded.graph, out));
    } else if (*decompose) {
      auto loaded = load(input);
      const Graph& g = loaded.graph;
      std::ostringstream os;
      if (kind == "core" || kind == "peak") {
        auto values = kind == "core" ? core_decomposition(g).values : peak_decomposition(g).values;
        for (NodeId v = 0; v < g.node_count(); ++v) os << g.label(v) << ' ' << values[v] << '\n';
      } else {
        auto values = kind == "truss" ? truss_decomposition(g).values : tripeak_decomposition(g).values;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
          os << g.label(g.edge(e).u) << ' ' << g.label(g.edge(e).v) << ' ' << values[e] << '\n';
      }
      emit(output, os.str());
    } else if (*metrics) {
      auto loaded = load(input);
      auto r = parse_report(read_file(result_path), loaded.graph);
      auto rep = level == "global" ? global_metrics(loaded.graph, r) : local_metrics(loaded.graph, r);
      std::cout << render_metrics(rep);
    } else if (*ceval) {
      const std::string report_text = read_file(result_path);
      Graph g;
      if (!input.empty()) {
        g = load(input).graph;
      } else {
        g = label_universe(report_text, read_file(truth));
      }
      auto r = parse_report(report_text, g);
      auto gt = load_ground_truth_file(truth, g);
      std::cout << render_accuracy(community_accuracy(g, r, gt));
    } else if (*benchcmd) {
      for (const auto& m : models) model_info(m);
      std::vector<Dataset> datasets;
      for (const auto& path : inputs) {
        auto name = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
        datasets.push_back({name, load(path).graph});
      }
      BenchOptions opts;
      opts.sweep = sweep;
      opts.repeat = repeat;
      opts.budget = budget;
      opts.limits.max_cliques = max_cliques;
      auto records = bench(datasets, models, opts);
      std::ofstream csv(out_csv);
      if (!csv) throw std::runtime_error("cannot write " + out_csv);
      write_bench_csv(csv, records);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Timeout& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
