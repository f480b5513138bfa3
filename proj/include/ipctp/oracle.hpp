#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ipctp/derived.hpp"
#include "ipctp/solution.hpp"

namespace ipctp {

/// Decisions the enumeration must respect. Used to compute the optimum of a
/// subproblem, e.g. the subtree below a search node.
struct OracleRestriction {
  std::map<int, int> yard;                       // inbound shipment -> location
  std::map<int, int> qc;                         // shipment -> crane
  std::map<int, std::vector<int>> qc_prefix;     // crane -> required sequence prefix
  std::map<int, std::vector<int>> yc_prefix;
  std::map<TupleKey, Order> orders;              // applies when the tuple is active
};

struct OracleOptions {
  std::uint64_t limit = 200'000'000;  // combination budget
  int workers = 1;
  OracleRestriction restriction;
};

struct OracleResult {
  Objective best_objective = 0;
  Solution best_solution;
  std::uint64_t enumerated = 0;
};

/// Exact number of complete decision combinations the enumeration visits
/// (saturates at UINT64_MAX).
std::uint64_t count_combinations(const Instance& instance, const DerivedTables& derived,
                                 const OracleRestriction& restriction = {});

/// Exhaustive search over yard assignments, QC assignments, every
/// permutation of every crane sequence and every order of the active
/// interference tuples. Each combination is scheduled and the minimum kept.
/// No symmetry is exploited.
///
/// Throws BudgetExceeded when count_combinations exceeds `options.limit`
/// and NoFeasibleSolution when no combination is acyclic.
OracleResult brute_force(const Instance& instance, const DerivedTables& derived,
                         const OracleOptions& options = {});

}  // namespace ipctp
