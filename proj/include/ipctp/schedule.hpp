#pragma once

#include <vector>

#include "ipctp/derived.hpp"
#include "ipctp/solution.hpp"

namespace ipctp {

/// Interference tuples whose cranes match the given QC assignment.
std::vector<InterferenceTuple> active_interferences(const DerivedTables& derived,
                                                    const std::map<int, int>& qc_assignment);

/// YC empty travel between the yard locations of two consecutive shipments.
inline Time yc_setup(const Instance& instance, int location_a, int location_b) {
  return instance.yc_travel()(location_a, location_b);
}

/// Earliest-start schedule for a complete set of discrete decisions.
///
/// Every start time is the longest path from time 0 in the precedence graph
/// formed by crane sequences, QC/YC handoffs and the chosen interference
/// orders. Throws InvalidDecisions when the decisions are structurally
/// incomplete and CyclicOrdering when the orders contradict the sequences.
Solution compute_schedule(const Instance& instance, const DerivedTables& derived,
                          const Decisions& decisions);

/// Sum over vessels of weight times the last completion among its
/// shipments (YC end for inbound, QC end for outbound).
Objective objective_of(const Instance& instance, const Solution& solution);

}  // namespace ipctp
