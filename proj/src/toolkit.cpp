#include "cohesive/toolkit.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cohesive/connectivity_models.hpp"
#include "cohesive/core_models.hpp"
#include "cohesive/deadline.hpp"
#include "cohesive/hybrid_models.hpp"
#include "cohesive/triangle_models.hpp"

namespace cohesive {

using nlohmann::ordered_json;

namespace {

ParamSpec int_param(std::string name, double min) { return {std::move(name), true, min, 1e18, false}; }
ParamSpec real_param(std::string name, double min, double max, bool min_exclusive = false) {
  return {std::move(name), false, min, max, min_exclusive};
}

std::vector<ParamMap> grid1(const char* name, std::initializer_list<double> values) {
  std::vector<ParamMap> out;
  for (double v : values) out.push_back({{name, v}});
  return out;
}

std::vector<ParamMap> grid2(const char* a, std::initializer_list<double> as, const char* b,
                            std::initializer_list<double> bs) {
  std::vector<ParamMap> out;
  for (double x : as)
    for (double y : bs) out.push_back({{a, x}, {b, y}});
  return out;
}

std::vector<ModelInfo> build_registry() {
  return {
      {"k-core", {int_param("k", 0)}, grid1("k", {3, 5, 7, 9})},
      {"kh-core", {int_param("k", 0), int_param("h", 1)},
       {{{"k", 3}, {"h", 2}}, {{"k", 5}, {"h", 2}}, {{"k", 7}, {"h", 2}}, {{"k", 9}, {"h", 2}}}},
      {"kp-core", {int_param("k", 0), real_param("p", 0, 1)}, grid2("k", {3, 5}, "p", {0.2, 0.4, 0.6, 0.8})},
      {"k-peak", {int_param("k", 0)}, grid1("k", {3, 5, 7, 9})},
      {"k-truss", {int_param("k", 2)}, grid1("k", {4, 6, 8, 10})},
      {"k-tripeak", {int_param("k", 2)}, grid1("k", {4, 6, 8, 10})},
      {"clique", {int_param("k", 1)}, grid1("k", {3, 5, 7, 9})},
      {"k-distance-clique", {int_param("k", 1)}, grid1("k", {2, 3, 4, 5})},
      {"k-vcc", {int_param("k", 1)}, grid1("k", {3, 5, 7, 9})},
      {"k-ecc", {int_param("k", 1)}, grid1("k", {3, 5, 7, 9})},
      {"alphacore", {real_param("alpha", 0, 1, true)}, grid1("alpha", {0.2, 0.4, 0.6, 0.8})},
      {"k-core-truss", {int_param("k", 2), real_param("alpha", 0, 1e18)},
       {{{"k", 4}, {"alpha", 1}}, {{"k", 6}, {"alpha", 1}}, {{"k", 8}, {"alpha", 1}}, {{"k", 10}, {"alpha", 1}}}},
      {"ks-core", {int_param("k", 1), int_param("s", 0)}, grid2("k", {3, 5}, "s", {2, 3, 4, 5})},
      {"scan", {int_param("k", 1), real_param("epsilon", 0, 1)}, grid2("k", {3, 5}, "epsilon", {0.2, 0.4, 0.6, 0.8})},
  };
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool is_integer_param(std::string_view model, const std::string& name) {
  for (const auto& p : model_info(model).params)
    if (p.name == name) return p.integer;
  return false;
}

ordered_json params_json(std::string_view model, const ParamMap& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params) {
    if (is_integer_param(model, k)) {
      j[k] = static_cast<long long>(v);
    } else {
      j[k] = v;
    }
  }
  return j;
}

ordered_json metrics_json(const MetricReport& r) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : r.values) j[k] = v;
  return j;
}

ordered_json accuracy_json(const AccuracyScores& s) {
  return ordered_json{{"nmi", s.nmi}, {"ari", s.ari}, {"f1", s.f1}, {"queries", s.queries}};
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

}  // namespace

const std::vector<ModelInfo>& registered_models() {
  static const std::vector<ModelInfo> registry = build_registry();
  return registry;
}

const ModelInfo& model_info(std::string_view id) {
  for (const auto& m : registered_models())
    if (m.id == id) return m;
  throw std::invalid_argument("unknown model '" + std::string(id) + "'");
}

void validate_params(const ModelInfo& info, const ParamMap& params) {
  for (const auto& [name, value] : params) {
    bool known = std::any_of(info.params.begin(), info.params.end(), [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw std::invalid_argument(info.id + ": unexpected parameter '" + name + "'");
  }
  for (const auto& ps : info.params) {
    auto it = params.find(ps.name);
    if (it == params.end()) throw std::invalid_argument(info.id + ": missing parameter '" + ps.name + "'");
    double v = it->second;
    if (!std::isfinite(v)) throw std::invalid_argument(info.id + ": parameter '" + ps.name + "' is not finite");
    if (ps.integer && v != std::floor(v))
      throw std::invalid_argument(info.id + ": parameter '" + ps.name + "' must be an integer");
    bool low = ps.min_exclusive ? v <= ps.min : v < ps.min;
    if (low || v > ps.max) {
      throw std::invalid_argument(info.id + ": parameter '" + ps.name + "' = " + format_number(v) +
                                  " is out of range");
    }
  }
}

std::vector<ParamMap> default_sweep(std::string_view model) { return model_info(model).sweep; }

ParamMap q3_params(std::string_view model) { return model_info(model).sweep.at(2); }

SubgraphResult run_registered(const Graph& g, std::string_view model, const ParamMap& params,
                              const CliqueOptions& budget) {
  const auto& info = model_info(model);
  validate_params(info, params);
  auto u = [&](const char* name) { return static_cast<unsigned>(params.at(name)); };
  auto d = [&](const char* name) { return params.at(name); };
  if (model == "k-core") return k_core(g, u("k"));
  if (model == "kh-core") return kh_core(g, u("k"), u("h"));
  if (model == "kp-core") return kp_core(g, u("k"), d("p"));
  if (model == "k-peak") return k_peak(g, u("k"));
  if (model == "k-truss") return k_truss(g, u("k"));
  if (model == "k-tripeak") return k_tripeak(g, u("k"));
  if (model == "clique") return at_least_k_clique(g, u("k"), budget);
  if (model == "k-distance-clique") return k_distance_clique(g, u("k"), budget);
  if (model == "k-vcc") return k_vcc(g, u("k"));
  if (model == "k-ecc") return k_ecc(g, u("k"));
  if (model == "alphacore") return alphacore(g, d("alpha"));
  if (model == "k-core-truss") return k_core_truss(g, u("k"), d("alpha"));
  if (model == "ks-core") return ks_core(g, u("k"), u("s"));
  if (model == "scan") return scan(g, u("k"), d("epsilon")).result;
  throw std::logic_error("model registered without dispatch");
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunOutput run_model(const Graph& g, const RunConfig& config, std::string digest) {
  RunOutput out;
  {
    std::optional<DeadlineScope> deadline;
    if (config.time_budget > 0) deadline.emplace(std::chrono::duration<double>(config.time_budget));
    out.result = run_registered(g, config.model, config.params, config.budget);
  }
  for (MetricLevel level : config.metric_levels) {
    out.metrics.push_back(level == MetricLevel::Global ? global_metrics(g, out.result) : local_metrics(g, out.result));
  }
  if (config.truth_path) {
    auto truth = load_ground_truth_file(*config.truth_path, g);
    out.accuracy = community_accuracy(g, out.result, truth);
  }
  out.provenance = {std::move(digest), g.node_count(), g.edge_count()};
  return out;
}

RunOutput run_model(const RunConfig& config) {
  validate_params(model_info(config.model), config.params);
  const std::string text = read_file(config.input_path);
  auto loaded = load_edge_list(text);
  return run_model(loaded.graph, config, fnv1a_hex(text));
}

std::string render_report(const Graph& g, const RunOutput& out) {
  const auto& r = out.result;
  ordered_json groups = ordered_json::array();
  for (const auto& grp : r.groups) groups.push_back(to_labels(g, grp));
  ordered_json j;
  j["model"] = r.model;
  j["params"] = params_json(r.model, r.params);
  j["grouping_kind"] = std::string(to_string(r.kind));
  j["group_count"] = r.groups.size();
  j["node_union_size"] = r.node_union().size();
  j["groups"] = std::move(groups);
  ordered_json metrics = ordered_json::object();
  for (const auto& m : out.metrics) metrics[std::string(to_string(m.level))] = metrics_json(m);
  j["metrics"] = std::move(metrics);
  if (out.accuracy) j["accuracy"] = accuracy_json(*out.accuracy);
  j["provenance"] = {{"input_digest", out.provenance.input_digest},
                     {"toolkit_version", std::string(kToolkitVersion)},
                     {"node_count", out.provenance.node_count},
                     {"edge_count", out.provenance.edge_count}};
  return j.dump(2) + "\n";
}

SubgraphResult parse_report(std::string_view text, const Graph& g) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  try {
    SubgraphResult r;
    r.model = j.at("model").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<double>();
    const auto kind = j.at("grouping_kind").get<std::string>();
    if (kind == "connected-components") {
      r.kind = GroupingKind::ConnectedComponents;
    } else if (kind == "cliques") {
      r.kind = GroupingKind::Cliques;
    } else if (kind == "clusters") {
      r.kind = GroupingKind::Clusters;
    } else {
      throw std::runtime_error("unknown grouping kind '" + kind + "'");
    }
    std::vector<NodeSet> groups;
    for (const auto& grp : j.at("groups")) groups.push_back(from_labels(g, grp.get<std::vector<std::string>>()));
    return make_result(r.model, r.params, r.kind, std::move(groups));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

std::string render_metrics(const MetricReport& report) {
  ordered_json j;
  j["level"] = std::string(to_string(report.level));
  j["values"] = metrics_json(report);
  return j.dump(2) + "\n";
}

std::string render_accuracy(const AccuracyScores& scores) { return accuracy_json(scores).dump(2) + "\n"; }

std::string_view to_string(BenchStatus status) {
  switch (status) {
    case BenchStatus::Ok:
      return "ok";
    case BenchStatus::Timeout:
      return "timeout";
    case BenchStatus::BudgetExceeded:
      return "budget-exceeded";
    case BenchStatus::Error:
      return "error";
  }
  return "error";
}

std::string format_params(const ParamMap& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + format_number(v);
  }
  return out;
}

std::vector<BenchRecord> bench(const std::vector<Dataset>& datasets, const std::vector<std::string>& models,
                               const BenchOptions& options) {
  for (const auto& m : models) model_info(m);
  const unsigned repeat = std::max(1u, options.repeat);
  std::vector<BenchRecord> records;
  for (const auto& ds : datasets) {
    for (const auto& model : models) {
      auto settings = options.sweep ? default_sweep(model) : std::vector<ParamMap>{q3_params(model)};
      for (const auto& params : settings) {
        BenchRecord rec{model, params, ds.name, ds.graph.node_count(), ds.graph.edge_count(), 0, {}, {},
                        BenchStatus::Ok};
        std::vector<double> times;
        for (unsigned i = 0; i < repeat; ++i) {
          auto start = std::chrono::steady_clock::now();
          try {
            std::optional<DeadlineScope> deadline;
            if (options.budget > 0) deadline.emplace(std::chrono::duration<double>(options.budget));
            auto result = run_registered(ds.graph, model, params, options.limits);
            rec.group_count = result.groups.size();
            rec.union_size = result.node_union().size();
          } catch (const Timeout&) {
            rec.status = BenchStatus::Timeout;
          } catch (const BudgetExceeded&) {
            rec.status = BenchStatus::BudgetExceeded;
          } catch (const std::exception&) {
            rec.status = BenchStatus::Error;
          }
          times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
          if (rec.status != BenchStatus::Ok) break;
        }
        if (rec.status != BenchStatus::Ok) {
          rec.group_count.reset();
          rec.union_size.reset();
          rec.seconds = times.back();
        } else {
          rec.seconds = median(times);
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "dataset,model,params,nodes,edges,seconds,groups,union_size,status\n";
  for (const auto& r : records) {
    out << r.dataset << ',' << r.model << ',' << format_params(r.params) << ',' << r.node_count << ','
        << r.edge_count << ',' << format_number(r.seconds) << ',';
    if (r.group_count) out << *r.group_count;
    out << ',';
    if (r.union_size) out << *r.union_size;
    out << ',' << to_string(r.status) << '\n';
  }
}

}  // namespace cohesive
