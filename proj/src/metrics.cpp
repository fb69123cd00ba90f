#include "cohesive/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "detail.hpp"

namespace cohesive {

namespace {

struct InducedCounts {
  std::size_t edges = 0;     // |E[H]|
  std::size_t cut = 0;       // edges leaving H
  std::size_t volume = 0;    // sum of d(u, G) over H
};

InducedCounts count_induced(const Graph& g, const detail::Mask& in, const NodeSet& nodes) {
  InducedCounts c;
  for (NodeId v : nodes) {
    c.volume += g.degree(v);
    for (NodeId w : g.neighbors(v)) {
      if (!in[w]) {
        ++c.cut;
      } else if (w > v) {
        ++c.edges;
      }
    }
  }
  return c;
}

double inverse_conductance(std::size_t cut, std::size_t vol_in, std::size_t vol_out) {
  std::size_t denom = std::min(vol_in, vol_out);
  if (denom == 0) return 1.0;
  return 1.0 - static_cast<double>(cut) / static_cast<double>(denom);
}

double pair_density(std::size_t edges, std::size_t nodes) {
  if (nodes < 2) return 0.0;
  return 2.0 * static_cast<double>(edges) / (static_cast<double>(nodes) * static_cast<double>(nodes - 1));
}

double transitivity(const Graph& g, const detail::Mask& in, const NodeSet& nodes) {
  std::size_t closed = 0;  // ordered wedge closures = 6 * triangles
  double triples = 0;
  for (NodeId v : nodes) {
    std::size_t d = 0;
    for (NodeId w : g.neighbors(v)) {
      if (!in[w]) continue;
      ++d;
      detail::for_common_alive_nodes(g, v, w, in, [&](NodeId, EdgeId, EdgeId) { ++closed; });
    }
    triples += static_cast<double>(d) * static_cast<double>(d > 0 ? d - 1 : 0) / 2.0;
  }
  if (triples == 0) return 0.0;
  // closed counts each triangle 6 times; transitivity = 3T / triples.
  return (static_cast<double>(closed) / 2.0) / triples;
}

double entropy(double p) {
  double h = 0;
  for (double x : {p, 1.0 - p})
    if (x > 0) h -= x * std::log(x);
  return h;
}

double choose2(double x) { return x * (x - 1) / 2.0; }

}  // namespace

std::string_view to_string(MetricLevel level) { return level == MetricLevel::Global ? "global" : "local"; }

std::optional<double> MetricReport::get(std::string_view name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  return std::nullopt;
}

MetricReport global_metrics(const Graph& g, const SubgraphResult& r) {
  MetricReport rep{MetricLevel::Global, {}};
  const NodeSet h = r.node_union();
  if (h.empty()) return rep;
  const detail::Mask in = detail::set_to_mask(g.node_count(), h);
  const auto c = count_induced(g, in, h);
  const std::size_t outside = g.node_count() - h.size();
  const double nh = static_cast<double>(h.size());

  double cut_ratio = 1.0;
  if (outside > 0) cut_ratio = 1.0 - static_cast<double>(c.cut) / (nh * static_cast<double>(outside));
  const std::size_t vol_out = 2 * g.edge_count() - c.volume;
  const auto comps = connected_components(g, h);

  rep.values = {
      {"average_degree", 2.0 * static_cast<double>(c.edges) / nh},
      {"cut_ratio", cut_ratio},
      {"clustering_coefficient", transitivity(g, in, h)},
      {"edge_density", pair_density(c.edges, h.size())},
      {"inverse_conductance", outside > 0 ? inverse_conductance(c.cut, c.volume, vol_out) : 1.0},
      {"average_component_size", nh / static_cast<double>(comps.size())},
  };
  return rep;
}

MetricReport local_metrics(const Graph& g, const SubgraphResult& r) {
  MetricReport rep{MetricLevel::Local, {}};
  if (r.groups.empty()) return rep;
  const double m = static_cast<double>(g.edge_count());
  double edge_density = 0, vertex_density = 0, inv_cond = 0, modularity = 0, size = 0;
  detail::Mask in(g.node_count(), 0);
  for (const auto& grp : r.groups) {
    for (NodeId v : grp) in[v] = 1;
    const auto c = count_induced(g, in, grp);
    for (NodeId v : grp) in[v] = 0;
    const double n = static_cast<double>(grp.size());
    edge_density += pair_density(c.edges, grp.size());
    vertex_density += static_cast<double>(c.edges) / n;
    inv_cond += inverse_conductance(c.cut, c.volume, 2 * g.edge_count() - c.volume);
    if (m > 0) {
      const double dc = static_cast<double>(c.volume);
      modularity += static_cast<double>(c.edges) / m - dc * dc / (4.0 * m * m);
    }
    size += n;
  }
  const double k = static_cast<double>(r.groups.size());
  rep.values = {
      {"edge_density", edge_density / k},
      {"vertex_density", vertex_density / k},
      {"inverse_conductance", inv_cond / k},
      {"modularity", modularity / k},
      {"average_component_size", size / k},
  };
  return rep;
}

const NodeSet* GroundTruth::community_of(NodeId v) const {
  for (const auto& c : communities)
    if (std::binary_search(c.begin(), c.end(), v)) return &c;
  return nullptr;
}

GroundTruth parse_ground_truth(std::string_view text, const Graph& g) {
  GroundTruth truth;
  std::vector<char> seen(g.node_count(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    NodeSet community;
    bool first = true;
    while (tokens >> tok) {
      if (first && tok[0] == '#') break;
      first = false;
      auto id = g.id_of(tok);
      if (!id) throw ParseError(lineno, "unknown node label '" + tok + "'");
      if (seen[*id]) throw ParseError(lineno, "node '" + tok + "' appears in more than one community");
      seen[*id] = 1;
      community.push_back(*id);
    }
    if (community.empty()) continue;
    std::sort(community.begin(), community.end());
    truth.communities.push_back(std::move(community));
  }
  return truth;
}

GroundTruth load_ground_truth_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ground_truth(buf.str(), g);
}

NodeSet community_for_query(const SubgraphResult& r, NodeId q) {
  // Groups are canonical (size descending, then lexicographic), so the first
  // hit is the largest with the smallest members.
  for (const auto& grp : r.groups)
    if (std::binary_search(grp.begin(), grp.end(), q)) return grp;
  return {};
}

AccuracyScores binary_scores(std::size_t n, const NodeSet& predicted, const NodeSet& truth) {
  AccuracyScores s;
  s.queries = 1;
  NodeSet both;
  std::set_intersection(predicted.begin(), predicted.end(), truth.begin(), truth.end(), std::back_inserter(both));
  const double tp = static_cast<double>(both.size());
  const double np = static_cast<double>(predicted.size());
  const double nt = static_cast<double>(truth.size());
  const double N = static_cast<double>(n);
  const double fp = np - tp, fn = nt - tp, tn = N - tp - fp - fn;

  s.f1 = (np + nt) > 0 ? 2.0 * tp / (np + nt) : 0.0;

  if (predicted == truth) {
    s.nmi = s.ari = 1.0;
    return s;
  }
  const double hp = entropy(np / N), ht = entropy(nt / N);
  if (hp > 0 && ht > 0) {
    double mi = 0;
    const double cells[4] = {tp, fp, fn, tn};
    const double rows[4] = {np, np, N - np, N - np};
    const double cols[4] = {nt, N - nt, nt, N - nt};
    for (int i = 0; i < 4; ++i)
      if (cells[i] > 0) mi += cells[i] / N * std::log(cells[i] * N / (rows[i] * cols[i]));
    s.nmi = std::clamp(mi / ((hp + ht) / 2.0), 0.0, 1.0);
  }
  const double index = choose2(tp) + choose2(fp) + choose2(fn) + choose2(tn);
  const double a = choose2(np) + choose2(N - np);
  const double b = choose2(nt) + choose2(N - nt);
  const double expected = a * b / choose2(N);
  const double denom = (a + b) / 2.0 - expected;
  s.ari = denom != 0 ? (index - expected) / denom : 0.0;
  return s;
}

AccuracyScores community_accuracy(const Graph& g, const SubgraphResult& r, const GroundTruth& truth) {
  AccuracyScores total;
  for (NodeId q : r.node_union()) {
    const NodeSet* t = truth.community_of(q);
    if (!t) continue;
    auto s = binary_scores(g.node_count(), community_for_query(r, q), *t);
    total.nmi += s.nmi;
    total.ari += s.ari;
    total.f1 += s.f1;
    ++total.queries;
  }
  if (total.queries == 0) throw UndefinedScore("no query node lies in a ground-truth community");
  const double k = static_cast<double>(total.queries);
  total.nmi /= k;
  total.ari /= k;
  total.f1 /= k;
  return total;
}

}  // namespace cohesive
