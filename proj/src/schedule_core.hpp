#pragma once

#include <vector>

#include "ipctp/derived.hpp"
#include "precedence_graph.hpp"

namespace ipctp::detail {

/// Index-based form of Decisions used on hot paths.
struct DenseDecisions {
  struct Separation {
    int first;
    int second;
    Time delta;
  };

  std::vector<int> location;                // every shipment; outbound = fixed location
  std::vector<std::vector<int>> qc_seqs;    // [crane - 1]
  std::vector<std::vector<int>> yc_seqs;    // [yc - 1]
  std::vector<Separation> interference;     // resolved interference orders
};

/// Node ids: QC task of shipment i is i, YC task is n + i.
class ScheduleEvaluator {
 public:
  ScheduleEvaluator(const Instance& instance, const DerivedTables& derived)
      : instance_(instance), derived_(derived), n_(instance.shipment_count()) {
    release_.assign(2 * n_, 0);
  }

  /// Earliest starts for the decisions; false if the orders are cyclic.
  bool evaluate(const DenseDecisions& d, std::vector<Time>& qc_start, std::vector<Time>& yc_start) {
    graph_.reset(2 * n_);
    const auto& ships = instance_.shipments();
    for (int i = 0; i < n_; ++i) {
      const auto& s = ships[i];
      if (s.inbound())
        graph_.add_arc(i, n_ + i, s.qc_time + instance_.yt_inbound_transfer()[d.location[i]]);
      else
        graph_.add_arc(n_ + i, i, s.yc_time + *s.yt_outbound_time);
    }
    for (const auto& seq : d.qc_seqs)
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const int a = seq[k - 1], b = seq[k];
        graph_.add_arc(a, b, ships[a].qc_time + derived_.qc_empty_travel(a, b));
      }
    for (const auto& seq : d.yc_seqs)
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const int a = seq[k - 1], b = seq[k];
        graph_.add_arc(n_ + a, n_ + b,
                       ships[a].yc_time + instance_.yc_travel()(d.location[a], d.location[b]));
      }
    for (const auto& sep : d.interference)
      graph_.add_arc(sep.first, sep.second, ships[sep.first].qc_time + sep.delta);

    if (!graph_.longest_path(release_, start_)) return false;
    qc_start.assign(start_.begin(), start_.begin() + n_);
    yc_start.assign(start_.begin() + n_, start_.end());
    return true;
  }

  /// Weighted completion objective plus per-vessel completions.
  Objective objective(const std::vector<Time>& qc_start, const std::vector<Time>& yc_start,
                      std::vector<Time>* completion = nullptr) const {
    std::vector<Time> c(instance_.vessel_count(), 0);
    for (const auto& s : instance_.shipments()) {
      const Time end = s.inbound() ? yc_start[s.id] + s.yc_time : qc_start[s.id] + s.qc_time;
      if (end > c[s.vessel]) c[s.vessel] = end;
    }
    Objective total = 0;
    for (const auto& v : instance_.vessels()) total += v.weight * c[v.id];
    if (completion) *completion = std::move(c);
    return total;
  }

 private:
  const Instance& instance_;
  const DerivedTables& derived_;
  int n_;
  PrecedenceGraph graph_;
  std::vector<Time> release_;
  std::vector<Time> start_;
};

}  // namespace ipctp::detail
