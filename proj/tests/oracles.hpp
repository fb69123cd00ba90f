#pragma once

// Brute-force reference implementations for small graphs. Everything here is
// written from the definitions, without the peeling and flow machinery the
// library uses.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

namespace oracle {

using cohesive::Graph;
using cohesive::GraphBuilder;
using cohesive::NodeId;
using cohesive::NodeSet;
using Bits = std::uint64_t;  // subset of node ids, n <= 64

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node(std::to_string(i));
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

// Random G(n, p) with n in [lo, hi] and p in [0.05, 0.6].
inline Graph random_small_graph(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  std::size_t n = size(rng);
  return random_graph(n, density(rng), rng);
}

inline bool adjacent(const Graph& g, NodeId u, NodeId v) {
  for (const auto& e : g.edges())
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  return false;
}

inline NodeSet members(Bits s, std::size_t n) {
  NodeSet out;
  for (NodeId v = 0; v < n; ++v)
    if (s >> v & 1) out.push_back(v);
  return out;
}

inline std::size_t inner_degree(const Graph& g, NodeId v, Bits s) {
  std::size_t d = 0;
  for (const auto& e : g.edges()) {
    if (e.u == v && (s >> e.v & 1)) ++d;
    if (e.v == v && (s >> e.u & 1)) ++d;
  }
  return d;
}

// Connectivity of the subgraph on node set s using the given edge list.
inline bool connected(Bits s, std::size_t n, const std::vector<cohesive::Edge>& edges) {
  if (s == 0) return true;
  Bits seen = s & (~s + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : edges) {
      if (!(s >> e.u & 1) || !(s >> e.v & 1)) continue;
      bool a = seen >> e.u & 1, b = seen >> e.v & 1;
      if (a != b) {
        seen |= Bits{1} << e.u | Bits{1} << e.v;
        grew = true;
      }
    }
  }
  (void)n;
  return seen == s;
}

// Node union of the k-core: the union of all subsets with min degree >= k
// (feasible sets are closed under union), isolated nodes dropped.
inline NodeSet k_core_nodes(const Graph& g, unsigned k) {
  const std::size_t n = g.node_count();
  Bits all = 0;
  for (Bits s = 1; s < (Bits{1} << n); ++s) {
    bool ok = true;
    for (NodeId v : members(s, n))
      if (inner_degree(g, v, s) < k) ok = false;
    if (ok) all |= s;
  }
  NodeSet out;
  for (NodeId v : members(all, n))
    if (inner_degree(g, v, all) > 0) out.push_back(v);
  return out;
}

// k-truss node set and edges by repeated from-scratch support checks.
inline std::vector<cohesive::Edge> k_truss_edges(const Graph& g, unsigned k) {
  std::vector<cohesive::Edge> alive = g.edges();
  while (true) {
    std::vector<cohesive::Edge> keep;
    auto has = [&](NodeId a, NodeId b) {
      if (a > b) std::swap(a, b);
      return std::find(alive.begin(), alive.end(), cohesive::Edge{a, b}) != alive.end();
    };
    for (const auto& e : alive) {
      std::size_t sup = 0;
      for (NodeId w = 0; w < g.node_count(); ++w)
        if (w != e.u && w != e.v && has(e.u, w) && has(e.v, w)) ++sup;
      if (sup + 2 >= k) keep.push_back(e);
    }
    if (keep.size() == alive.size()) return alive;
    alive = std::move(keep);
  }
}

inline bool is_clique(const Graph& g, Bits s) {
  auto m = members(s, g.node_count());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!adjacent(g, m[i], m[j])) return false;
  return true;
}

// Maximal cliques of >= 2 nodes by subset enumeration.
inline std::vector<NodeSet> maximal_cliques(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<Bits> cliques;
  for (Bits s = 1; s < (Bits{1} << n); ++s)
    if (std::popcount(s) >= 2 && is_clique(g, s)) cliques.push_back(s);
  std::vector<NodeSet> out;
  for (Bits s : cliques) {
    bool maximal = true;
    for (NodeId v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1) && is_clique(g, s | Bits{1} << v)) maximal = false;
    if (maximal) out.push_back(members(s, n));
  }
  cohesive::canonicalize(out);
  return out;
}

// Calls fn on every r-subset of `items` (as a bit mask over item indices).
inline void for_each_subset(std::size_t size, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick(r);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == r) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i < size; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Removing any k-1 nodes of s leaves the rest connected, and |s| >= k+2.
inline bool vertex_resilient(const Graph& g, Bits s, unsigned k) {
  const std::size_t n = g.node_count();
  auto m = members(s, n);
  if (m.size() < k + 2) return false;
  bool ok = connected(s, n, g.edges());
  if (!ok) return false;
  for_each_subset(m.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    Bits rest = s;
    for (auto i : idx) rest &= ~(Bits{1} << m[i]);
    if (!connected(rest, n, g.edges())) ok = false;
  });
  return ok;
}

// Removing any k-1 internal edges of G[s] leaves it connected, and |s| >= 2.
inline bool edge_resilient(const Graph& g, Bits s, unsigned k) {
  const std::size_t n = g.node_count();
  if (std::popcount(s) < 2) return false;
  std::vector<cohesive::Edge> inner;
  for (const auto& e : g.edges())
    if ((s >> e.u & 1) && (s >> e.v & 1)) inner.push_back(e);
  if (!connected(s, n, inner)) return false;
  if (inner.size() <= k - 1) return false;  // every edge can be removed
  bool ok = true;
  for_each_subset(inner.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    std::vector<cohesive::Edge> rest;
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(inner[i]);
    if (!connected(s, n, rest)) ok = false;
  });
  return ok;
}

inline Bits to_bits(const NodeSet& s) {
  Bits b = 0;
  for (NodeId v : s) b |= Bits{1} << v;
  return b;
}

// Inclusion-maximal members of the family of subsets satisfying `pred`.
inline std::vector<NodeSet> maximal_sets(const Graph& g, const std::function<bool(Bits)>& pred) {
  const std::size_t n = g.node_count();
  std::vector<Bits> good;
  for (Bits s = 1; s < (Bits{1} << n); ++s)
    if (pred(s)) good.push_back(s);
  std::vector<NodeSet> out;
  for (Bits s : good) {
    bool maximal = std::none_of(good.begin(), good.end(), [&](Bits t) { return t != s && (t & s) == s; });
    if (maximal) out.push_back(members(s, n));
  }
  cohesive::canonicalize(out);
  return out;
}

inline std::vector<NodeSet> k_vcc(const Graph& g, unsigned k) {
  return maximal_sets(g, [&](Bits s) { return vertex_resilient(g, s, k); });
}

inline std::vector<NodeSet> k_ecc(const Graph& g, unsigned k) {
  return maximal_sets(g, [&](Bits s) { return edge_resilient(g, s, k); });
}

// Naive metric helpers: plain scans over the edge list.
inline std::size_t internal_edges(const Graph& g, const NodeSet& h) {
  std::set<NodeId> in(h.begin(), h.end());
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if (in.count(e.u) && in.count(e.v)) ++c;
  return c;
}

inline std::size_t boundary_edges(const Graph& g, const NodeSet& h) {
  std::set<NodeId> in(h.begin(), h.end());
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if (in.count(e.u) != in.count(e.v)) ++c;
  return c;
}

inline std::size_t volume(const Graph& g, const NodeSet& h) {
  std::set<NodeId> in(h.begin(), h.end());
  std::size_t c = 0;
  for (const auto& e : g.edges()) c += in.count(e.u) + in.count(e.v);
  return c;
}

inline NodeSet all_nodes(const Graph& g) {
  NodeSet s(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) s[v] = v;
  return s;
}

inline bool subset(const NodeSet& a, const NodeSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace oracle
