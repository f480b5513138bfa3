#pragma once

#include <array>
#include <map>
#include <vector>

#include "ipctp/instance.hpp"

namespace ipctp {

/// One element of the interference set: shipments i < j handled by quay
/// cranes v and w must have their QC start times separated by `delta` on top
/// of the first task's handling time.
struct InterferenceTuple {
  int i = 0;
  int j = 0;
  int v = 0;
  int w = 0;
  Time delta = 0;

  auto key() const { return std::array<int, 4>{i, j, v, w}; }
  bool operator==(const InterferenceTuple&) const = default;
};

struct DerivedTables {
  std::vector<std::vector<int>> eligible_qcs;                 // per shipment, ascending
  Matrix<int> crane_min_distance;                             // indexed [v-1][w-1]
  std::map<std::array<int, 4>, Time> interference_time;       // nonzero entries only
  std::vector<InterferenceTuple> interference_set;            // lexicographic (i, j, v, w)
  Matrix<Time> qc_empty_travel;                               // shipment x shipment
  Matrix<Time> yc_empty_travel;                               // location x location

  /// Interference time of an ordered tuple; 0 when the tuple is not in the set.
  Time interference(int i, int j, int v, int w) const;
};

/// Quay cranes that can reach `bay` while every other crane keeps the safety
/// spacing inside [1, total_bays]. Throws NoEligibleCrane if none can.
std::vector<int> eligible_qcs(int bay, int total_bays, int qc_count, int safety_distance);

/// Smallest allowed bay difference between cranes v and w: (delta+1)|v-w|.
int crane_min_distance(int v, int w, int safety_distance);

/// Piecewise interference time for shipment bays `bay_i`, `bay_j` on cranes
/// v, w. Callers pass distinct shipments; identical shipments never interfere.
Time interference_time(int bay_i, int bay_j, int v, int w, int safety_distance,
                       Time qc_unit_travel);

/// Same, addressed by shipment ids of `instance` (0 when i == j).
Time interference_time(const Instance& instance, int i, int j, int v, int w);

DerivedTables build_derived(const Instance& instance);

/// Canonical text form of the tables, used to check determinism.
std::string derived_to_json(const DerivedTables& tables);

}  // namespace ipctp
