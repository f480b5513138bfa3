#pragma once

#include <limits>
#include <vector>

#include "ipctp/instance.hpp"

namespace ipctp::detail {

/// Difference-constraint graph: an arc (a, b, w) means start[b] >= start[a] + w.
/// Node ids are dense; the graph is cleared and refilled between evaluations
/// so that the allocations are reused.
class PrecedenceGraph {
 public:
  explicit PrecedenceGraph(int nodes = 0) { reset(nodes); }

  void reset(int nodes) {
    nodes_ = nodes;
    first_out_.assign(nodes, -1);
    first_in_.assign(nodes, -1);
    arcs_.clear();
  }

  int nodes() const { return nodes_; }

  void add_arc(int from, int to, Time weight) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({from, to, weight, first_out_[from], first_in_[to]});
    first_out_[from] = id;
    first_in_[to] = id;
  }

  /// Topological order, or false if the graph has a cycle.
  bool topological_order(std::vector<int>& order) const {
    indegree_.assign(nodes_, 0);
    for (const auto& a : arcs_) ++indegree_[a.to];
    order.clear();
    for (int v = 0; v < nodes_; ++v)
      if (indegree_[v] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int e = first_out_[order[head]]; e >= 0; e = arcs_[e].next_out)
        if (--indegree_[arcs_[e].to] == 0) order.push_back(arcs_[e].to);
    }
    return static_cast<int>(order.size()) == nodes_;
  }

  /// Forward pass: start[v] = max(release[v], max over arcs of start[a] + w).
  bool longest_path(const std::vector<Time>& release, std::vector<Time>& start) {
    if (!topological_order(order_)) return false;
    start = release;
    for (int v : order_)
      for (int e = first_out_[v]; e >= 0; e = arcs_[e].next_out) {
        const auto& a = arcs_[e];
        if (start[v] + a.weight > start[a.to]) start[a.to] = start[v] + a.weight;
      }
    return true;
  }

  /// Backward pass over the order of the last forward pass:
  /// latest[v] = min(deadline[v], min over arcs of latest[b] - w).
  void latest_starts(const std::vector<Time>& deadline, std::vector<Time>& latest) const {
    latest = deadline;
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const int v = *it;
      for (int e = first_out_[v]; e >= 0; e = arcs_[e].next_out) {
        const auto& a = arcs_[e];
        if (latest[a.to] != kInfinity && latest[a.to] - a.weight < latest[v])
          latest[v] = latest[a.to] - a.weight;
      }
    }
  }

  static constexpr Time kInfinity = std::numeric_limits<Time>::max() / 4;

 private:
  struct Arc {
    int from;
    int to;
    Time weight;
    int next_out;
    int next_in;
  };

  int nodes_ = 0;
  std::vector<int> first_out_;
  std::vector<int> first_in_;
  std::vector<Arc> arcs_;
  std::vector<int> order_;
  mutable std::vector<int> indegree_;
};

}  // namespace ipctp::detail
