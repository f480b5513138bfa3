#pragma once

#include <string>
#include <vector>

#include "ipctp/derived.hpp"
#include "ipctp/solution.hpp"

namespace ipctp {

/// A broken constraint. `family` names the MIP constraint family ("2-04",
/// ..., "2-27") or "bounds" for missing/negative start times.
struct Violation {
  std::string family;
  std::string kind;
  std::vector<int> ids;
  std::string message;
};

/// Checks every constraint family of the MIP model against a solution.
/// Returns an empty list iff the solution is feasible and its reported
/// objective is consistent.
///
/// Structural defects suppress the checks that depend on them: a crane whose
/// sequence repeats a shipment gets no timing checks, and a shipment with no
/// valid yard location gets no YC checks.
std::vector<Violation> validate(const Instance& instance, const DerivedTables& derived,
                                const Solution& solution);

std::string violations_to_json(const std::vector<Violation>& violations);

}  // namespace ipctp
