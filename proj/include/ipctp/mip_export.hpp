#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ipctp/derived.hpp"
#include "ipctp/solution.hpp"

namespace ipctp {

/// Linear model of the MIP formulation. Shipment i appears in variable names
/// as i + 1; 0 and n + 1 are the dummy first and last shipments. Yard
/// locations keep their ids, cranes their 1-based ids.
struct MipModel {
  enum class Sense { le, ge, eq };

  struct Variable {
    std::string name;
    bool binary = false;
    std::string kind;        // x, z, qz, v, theta, sqc, syc, t, sy, Cmax
    std::vector<int> ids;    // semantic ids in naming order
  };

  struct Term {
    int var = 0;
    std::int64_t coef = 0;
  };

  struct Row {
    std::string name;
    std::string family;      // "2-02" ... "2-27"
    std::vector<Term> terms;
    Sense sense = Sense::le;
    std::int64_t rhs = 0;
  };

  std::vector<Variable> variables;
  std::vector<Row> rows;
  std::vector<Term> objective;
  std::int64_t big_m = 0;
  int dummy_first = 0;
  int dummy_last = 0;

  std::optional<int> find(const std::string& name) const;
  std::size_t family_rows(const std::string& family) const;

  std::map<std::string, int> index;  // name -> variable position
};

struct MipOptions {
  std::optional<std::int64_t> big_m;
  std::set<std::string> disabled_families;  // e.g. {"2-27"} for debugging
};

/// Horizon bound on every start time of an earliest-start schedule plus the
/// largest single arc, so each deactivated big-M row stays slack.
std::int64_t default_big_m(const Instance& instance, const DerivedTables& derived);

MipModel build_mip(const Instance& instance, const DerivedTables& derived, const MipOptions& options = {});

/// CPLEX-LP text of the model.
std::string mip_to_lp(const MipModel& model);

/// Variable registry and per-family row counts as JSON.
std::string mip_mapping_json(const MipModel& model);

/// Values of every model variable that describe `solution`.
std::vector<double> mip_point_from_solution(const Instance& instance, const DerivedTables& derived,
                                            const MipModel& model, const Solution& solution);

/// Names of the rows violated by `values` (absolute tolerance `tol`).
std::vector<std::string> check_mip_point(const MipModel& model, const std::vector<double>& values,
                                         double tol = 1e-6);

/// Reads "name value" lines; blank lines and lines starting with '#' are
/// skipped. Throws FormatError with the line number on malformed input.
std::map<std::string, double> parse_mip_values(const std::string& text);

/// Rebuilds discrete decisions from solver values and schedules them.
/// The result still has to pass validate().
Solution solution_from_mip_values(const Instance& instance, const DerivedTables& derived,
                                  const MipModel& model, const std::map<std::string, double>& values);

}  // namespace ipctp
