#pragma once

// Dinic's algorithm on small integer capacities. Flow can be capped, which
// turns "is the connectivity below k?" into O(k) augmenting phases.

#include <algorithm>
#include <limits>
#include <vector>

#include "cohesive/deadline.hpp"

namespace cohesive::detail {

class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1), level_(n), iter_(n) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), iter_.begin());
      while (flow < limit) {
        int pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  // Nodes reachable from s in the residual graph after max_flow().
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  bool bfs(int s, int t) {
    poll_deadline();
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int x, int t, int want) {
    if (x == t) return want;
    for (int& a = iter_[x]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1) continue;
      int got = dfs(arc.to, t, std::min(want, arc.cap));
      if (got > 0) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace cohesive::detail
