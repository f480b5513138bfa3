#include "ipctp/schedule.hpp"

#include <algorithm>
#include <string>

#include "ipctp/error.hpp"
#include "schedule_core.hpp"

namespace ipctp {

std::vector<InterferenceTuple> active_interferences(const DerivedTables& derived,
                                                    const std::map<int, int>& qc_assignment) {
  std::vector<InterferenceTuple> out;
  for (const auto& t : derived.interference_set) {
    const auto a = qc_assignment.find(t.i);
    const auto b = qc_assignment.find(t.j);
    if (a != qc_assignment.end() && b != qc_assignment.end() && a->second == t.v &&
        b->second == t.w)
      out.push_back(t);
  }
  return out;
}

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw InvalidDecisions(msg); }

std::string sid(int s) { return "shipment " + std::to_string(s); }

}  // namespace

Solution compute_schedule(const Instance& instance, const DerivedTables& derived,
                          const Decisions& decisions) {
  const int n = instance.shipment_count();
  detail::DenseDecisions dense;
  dense.location.assign(n, -1);
  dense.qc_seqs.assign(instance.qc_count(), {});
  dense.yc_seqs.assign(instance.yc_count(), {});

  // Yard locations.
  std::vector<int> used(instance.location_count(), 0);
  for (const auto& [s, loc] : decisions.yard_assignment) {
    if (s < 0 || s >= n || !instance.shipment(s).inbound())
      invalid("yard_assignment: " + sid(s) + " is not an inbound shipment");
    if (loc < 0 || loc >= instance.location_count() ||
        instance.location(loc).reserved_for != Reservation::inbound_available)
      invalid("yard_assignment: location " + std::to_string(loc) + " is not available");
    if (used[loc]++) invalid("yard_assignment: location " + std::to_string(loc) + " used twice");
    dense.location[s] = loc;
  }
  for (const auto& s : instance.shipments()) {
    if (s.outbound()) dense.location[s.id] = *s.fixed_location;
    else if (dense.location[s.id] < 0) invalid("yard_assignment: " + sid(s.id) + " unassigned");
  }

  // Quay crane sequences.
  std::vector<int> qc_of(n, 0);
  for (const auto& [crane, seq] : decisions.qc_sequences) {
    if (crane < 1 || crane > instance.qc_count())
      invalid("qc_sequences: unknown crane " + std::to_string(crane));
    for (int s : seq) {
      if (s < 0 || s >= n) invalid("qc_sequences: unknown " + sid(s));
      if (qc_of[s]) invalid("qc_sequences: " + sid(s) + " appears more than once");
      const auto& elig = derived.eligible_qcs[s];
      if (!std::binary_search(elig.begin(), elig.end(), crane))
        invalid("qc_sequences: crane " + std::to_string(crane) + " not eligible for " + sid(s));
      qc_of[s] = crane;
    }
    dense.qc_seqs[crane - 1] = seq;
  }
  for (int s = 0; s < n; ++s)
    if (!qc_of[s]) invalid("qc_sequences: " + sid(s) + " is not sequenced");

  // Yard crane sequences.
  std::vector<int> yc_of(n, 0);
  for (const auto& [crane, seq] : decisions.yc_sequences) {
    if (crane < 1 || crane > instance.yc_count())
      invalid("yc_sequences: unknown crane " + std::to_string(crane));
    for (int s : seq) {
      if (s < 0 || s >= n) invalid("yc_sequences: unknown " + sid(s));
      if (yc_of[s]) invalid("yc_sequences: " + sid(s) + " appears more than once");
      if (instance.yc_of(dense.location[s]) != crane)
        invalid("yc_sequences: " + sid(s) + " is not stored in the area of YC " +
                std::to_string(crane));
      yc_of[s] = crane;
    }
    dense.yc_seqs[crane - 1] = seq;
  }
  for (int s = 0; s < n; ++s)
    if (!yc_of[s]) invalid("yc_sequences: " + sid(s) + " is not sequenced");

  // Interference orders for every active tuple.
  std::map<int, int> assignment;
  for (int s = 0; s < n; ++s) assignment[s] = qc_of[s];
  const auto active = active_interferences(derived, assignment);
  std::map<TupleKey, Order> orders;
  for (const auto& t : active) {
    const auto it = decisions.interference_order.find(t.key());
    if (it == decisions.interference_order.end())
      invalid("interference_order: no order for active tuple (" + std::to_string(t.i) + ", " +
              std::to_string(t.j) + ", " + std::to_string(t.v) + ", " + std::to_string(t.w) + ")");
    orders[t.key()] = it->second;
    if (it->second == Order::i_first) dense.interference.push_back({t.i, t.j, t.delta});
    else dense.interference.push_back({t.j, t.i, t.delta});
  }

  detail::ScheduleEvaluator eval(instance, derived);
  std::vector<Time> qc_start, yc_start;
  if (!eval.evaluate(dense, qc_start, yc_start))
    throw CyclicOrdering("interference orders contradict the crane sequences");

  Solution sol;
  sol.yard_assignment = decisions.yard_assignment;
  for (int c = 1; c <= instance.qc_count(); ++c) sol.qc_sequences[c] = dense.qc_seqs[c - 1];
  for (int c = 1; c <= instance.yc_count(); ++c) sol.yc_sequences[c] = dense.yc_seqs[c - 1];
  sol.interference_order = std::move(orders);
  for (int s = 0; s < n; ++s) {
    sol.qc_start[s] = qc_start[s];
    sol.yc_start[s] = yc_start[s];
  }
  for (int s : instance.inbound())
    sol.yt_time[s] = instance.yt_inbound_transfer()[dense.location[s]];
  for (const auto& seq : dense.yc_seqs)
    for (std::size_t k = 1; k < seq.size(); ++k) {
      const int a = seq[k - 1], b = seq[k];
      if (instance.shipment(a).inbound() || instance.shipment(b).inbound())
        sol.yc_empty[{a, b}] = yc_setup(instance, dense.location[a], dense.location[b]);
    }
  std::vector<Time> completion;
  sol.objective = eval.objective(qc_start, yc_start, &completion);
  for (int v = 0; v < instance.vessel_count(); ++v) sol.per_vessel_completion[v] = completion[v];
  sol.status = Status::feasible;
  return sol;
}

Objective objective_of(const Instance& instance, const Solution& solution) {
  std::vector<Time> completion(instance.vessel_count(), 0);
  for (const auto& s : instance.shipments()) {
    const auto& starts = s.inbound() ? solution.yc_start : solution.qc_start;
    const auto it = starts.find(s.id);
    if (it == starts.end())
      throw InvalidDecisions("objective_of: " + sid(s.id) + " has no start time");
    const Time end = it->second + (s.inbound() ? s.yc_time : s.qc_time);
    completion[s.vessel] = std::max(completion[s.vessel], end);
  }
  Objective total = 0;
  for (const auto& v : instance.vessels()) total += v.weight * completion[v.id];
  return total;
}

}  // namespace ipctp
