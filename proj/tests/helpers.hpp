#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

// Toy-network node sets written with the network's own labels (label i is
// node id i-1).
inline cohesive::NodeSet toy(std::initializer_list<int> labels) {
  cohesive::NodeSet s;
  for (int l : labels) s.push_back(static_cast<cohesive::NodeId>(l - 1));
  std::sort(s.begin(), s.end());
  return s;
}

inline cohesive::NodeSet toy_range(int lo, int hi, std::initializer_list<int> skip = {}) {
  cohesive::NodeSet s;
  for (int l = lo; l <= hi; ++l)
    if (std::find(skip.begin(), skip.end(), l) == skip.end()) s.push_back(static_cast<cohesive::NodeId>(l - 1));
  return s;
}

inline std::vector<cohesive::NodeSet> groups(std::vector<cohesive::NodeSet> g) {
  cohesive::canonicalize(g);
  return g;
}

#ifndef COHESIVE_DATA_DIR
#define COHESIVE_DATA_DIR "data"
#endif

inline std::string data_path(const char* name) { return std::string(COHESIVE_DATA_DIR) + "/" + name; }

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<cohesive::NodeSet> {
  static String convert(const cohesive::NodeSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return (out + "}").c_str();
  }
};
template <>
struct StringMaker<std::vector<cohesive::NodeSet>> {
  static String convert(const std::vector<cohesive::NodeSet>& g) {
    std::string out = "[";
    for (const auto& s : g) out += StringMaker<cohesive::NodeSet>::convert(s).c_str();
    return (out + "]").c_str();
  }
};
}  // namespace doctest
#endif
