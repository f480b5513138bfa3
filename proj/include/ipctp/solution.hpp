#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ipctp/instance.hpp"

namespace ipctp {

enum class Status { feasible, optimal, infeasible, unknown };

/// Which side of an interference tuple (i, j, v, w) is handled first.
enum class Order { i_first, j_first };

using TupleKey = std::array<int, 4>;

/// The discrete part of a solution. Start times follow from it.
struct Decisions {
  std::map<int, int> yard_assignment;               // inbound shipment -> location
  std::map<int, std::vector<int>> qc_sequences;     // QC id -> shipments in order
  std::map<int, std::vector<int>> yc_sequences;     // YC id -> shipments in order
  std::map<TupleKey, Order> interference_order;     // active tuples only

  /// Shipment -> crane, read off qc_sequences (last occurrence wins).
  std::map<int, int> qc_assignment() const;
};

struct Solution : Decisions {
  std::map<int, Time> qc_start;
  std::map<int, Time> yc_start;
  std::map<int, Time> yt_time;                      // inbound shipment -> tt of its location
  std::map<std::pair<int, int>, Time> yc_empty;     // consecutive YC pair -> empty travel
  Objective objective = 0;
  std::map<int, Time> per_vessel_completion;        // unweighted C_s
  Status status = Status::unknown;

  Decisions decisions() const { return *this; }
};

std::string to_string(Status s);
Status status_from_string(const std::string& s);

std::string solution_to_json(const Solution& solution);
Solution solution_from_json(const std::string& text);

Solution load_solution(const std::string& path);
void save_solution(const Solution& solution, const std::string& path);

}  // namespace ipctp
