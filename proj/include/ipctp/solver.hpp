#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ipctp/derived.hpp"
#include "ipctp/solution.hpp"

namespace ipctp {

struct SolveParams {
  double time_limit = 600.0;  // seconds
  int workers = 1;
  std::uint64_t seed = 0;     // recorded only; the search has no random choices
};

struct TracePoint {
  double time = 0.0;
  Objective objective = 0;
};

struct SolveReport {
  std::optional<Objective> best_objective;
  Objective lower_bound = 0;
  std::optional<double> gap_percent;
  Status status = Status::unknown;
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
  double wall_time = 0.0;
  std::vector<TracePoint> incumbent_trace;
};

struct SolveResult {
  SolveReport report;
  std::optional<Solution> solution;
};

/// Partial assignment explored by the branch-and-bound. Tasks are numbered
/// like the schedule graph: QC task of shipment i is i, YC task is n + i.
struct SearchNode {
  std::vector<int> location;               // per shipment, -1 while undecided
  std::vector<int> qc;                     // per shipment, 0 while undecided
  std::vector<std::vector<int>> qc_seq;    // [crane - 1] sequenced prefix
  std::vector<std::vector<int>> yc_seq;    // [yc - 1] sequenced prefix
  std::vector<char> qc_placed;
  std::vector<char> yc_placed;
  std::vector<signed char> order;          // per interference tuple: -1, 0 (i first), 1 (j first)
  std::vector<Time> est;                   // earliest start per task
  std::vector<Time> lst;                   // latest start per task
  Objective lower_bound = 0;
  int depth = 0;
};

/// Propagation and bounding machinery shared by every node of one search.
/// Holds scratch buffers, so each worker owns its own context.
class SearchContext {
 public:
  SearchContext(const Instance& instance, const DerivedTables& derived);
  ~SearchContext();
  SearchContext(const SearchContext&) = delete;
  SearchContext& operator=(const SearchContext&) = delete;

  const Instance& instance() const { return inst_; }
  const std::vector<InterferenceTuple>& tuples() const { return der_.interference_set; }

  SearchNode root() const;

  /// Tightens the time windows of `node` to a fixpoint: precedence arcs,
  /// crane sequence arcs with transition times, decided interference arcs,
  /// deadlines implied by `upper_bound` and forced interference orders.
  /// Returns false when the node cannot contain a solution better than
  /// `upper_bound`.
  bool propagate(SearchNode& node, std::optional<Objective> upper_bound = std::nullopt);

  /// Admissible bound on the objective of every completion of a propagated
  /// node: the larger of the per-vessel chain bound and the per-crane
  /// workload bound.
  Objective lower_bound(const SearchNode& node) const;

  void assign_location(SearchNode& node, int shipment, int location) const;
  void assign_qc(SearchNode& node, int shipment, int crane) const;
  void append_qc(SearchNode& node, int crane, int shipment) const;
  void append_yc(SearchNode& node, int crane, int shipment) const;
  void decide_order(SearchNode& node, std::size_t tuple, Order order) const;

  /// True when the tuple's cranes are the ones assigned in `node`.
  bool active(const SearchNode& node, std::size_t tuple) const;

  std::uint64_t propagations() const { return propagations_; }

 private:
  friend class SearchEngine;

  Time qc_setup(int a, int b) const;
  Time yc_setup(const SearchNode& node, int a, int b) const;
  Time min_free_transfer(const SearchNode& node) const;
  bool build_and_pass(SearchNode& node, std::optional<Objective> upper_bound);

  const Instance& inst_;
  const DerivedTables& der_;
  int n_;
  Matrix<Time> yc_closure_;  // shortest-path closure of the YC travel times
  std::uint64_t propagations_ = 0;
  struct Scratch;
  std::unique_ptr<Scratch> scratch_;
};

/// Exact branch-and-bound over yard locations, QC assignment, crane
/// sequences and interference orders. Anytime: on timeout the best
/// incumbent and the smallest open bound are reported.
SolveResult solve(const Instance& instance, const DerivedTables& derived,
                  const SolveParams& params = {});

std::string report_to_json(const SolveReport& report, bool include_timing = true);

}  // namespace ipctp
