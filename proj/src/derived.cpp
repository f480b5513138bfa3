#include "ipctp/derived.hpp"

#include <cstdlib>
#include <string>

#include <json.hpp>

#include "ipctp/error.hpp"

namespace ipctp {

std::vector<int> eligible_qcs(int bay, int total_bays, int qc_count, int safety_distance) {
  if (qc_count < 1) throw NoEligibleCrane("QC_T must be positive");
  if (bay < 1 || bay > total_bays)
    throw NoEligibleCrane("bay " + std::to_string(bay) + " outside [1, " +
                          std::to_string(total_bays) + "]");
  const int step = safety_distance + 1;
  std::vector<int> out;
  for (int q = 1; q <= qc_count; ++q) {
    const int lo = (q - 1) * step + 1;
    const int hi = total_bays - (qc_count - q) * step;
    if (lo <= bay && bay <= hi) out.push_back(q);
  }
  if (out.empty())
    throw NoEligibleCrane("no quay crane can reach bay " + std::to_string(bay));
  return out;
}

int crane_min_distance(int v, int w, int safety_distance) {
  return (safety_distance + 1) * std::abs(v - w);
}

Time interference_time(int bay_i, int bay_j, int v, int w, int safety_distance,
                       Time qc_unit_travel) {
  const int dist = crane_min_distance(v, w, safety_distance);
  if (v < w && bay_i > bay_j - dist) return (bay_i - bay_j + dist) * qc_unit_travel;
  if (v > w && bay_i < bay_j + dist) return (bay_j - bay_i + dist) * qc_unit_travel;
  return 0;
}

Time interference_time(const Instance& instance, int i, int j, int v, int w) {
  if (i == j) return 0;
  const auto& g = instance.geometry();
  return interference_time(instance.shipment(i).bay, instance.shipment(j).bay, v, w,
                           g.safety_distance, g.qc_unit_travel);
}

Time DerivedTables::interference(int i, int j, int v, int w) const {
  auto it = interference_time.find({i, j, v, w});
  return it == interference_time.end() ? 0 : it->second;
}

DerivedTables build_derived(const Instance& instance) {
  const auto& g = instance.geometry();
  const int n = instance.shipment_count();
  DerivedTables t;

  t.eligible_qcs.reserve(n);
  for (const auto& s : instance.shipments()) {
    try {
      t.eligible_qcs.push_back(eligible_qcs(s.bay, g.total_bays, g.qc_count, g.safety_distance));
    } catch (const NoEligibleCrane& e) {
      throw NoEligibleCrane("shipment " + std::to_string(s.id) + ": " + e.what());
    }
  }

  t.crane_min_distance = Matrix<int>(g.qc_count);
  for (int v = 1; v <= g.qc_count; ++v)
    for (int w = 1; w <= g.qc_count; ++w)
      t.crane_min_distance(v - 1, w - 1) = crane_min_distance(v, w, g.safety_distance);

  // Tuples whose cranes are not eligible for their shipments can never be
  // active, so the set only ranges over eligible pairs.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int v : t.eligible_qcs[i]) {
        for (int w : t.eligible_qcs[j]) {
          const Time d = interference_time(instance, i, j, v, w);
          if (d > 0) {
            t.interference_time[{i, j, v, w}] = d;
            t.interference_set.push_back({i, j, v, w, d});
          }
        }
      }
    }
  }

  t.qc_empty_travel = Matrix<Time>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.qc_empty_travel(i, j) =
          g.qc_unit_travel * std::abs(instance.shipment(i).bay - instance.shipment(j).bay);

  t.yc_empty_travel = instance.yc_travel();
  return t;
}

std::string derived_to_json(const DerivedTables& tables) {
  using nlohmann::json;
  json doc;
  doc["eligible_qcs"] = tables.eligible_qcs;
  const auto matrix = [](const auto& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    return rows;
  };
  doc["crane_min_distance"] = matrix(tables.crane_min_distance);
  json theta = json::array();
  for (const auto& e : tables.interference_set)
    theta.push_back({{"i", e.i}, {"j", e.j}, {"v", e.v}, {"w", e.w}, {"delta", e.delta}});
  doc["interference_set"] = theta;
  doc["qc_empty_travel"] = matrix(tables.qc_empty_travel);
  doc["yc_empty_travel"] = matrix(tables.yc_empty_travel);
  return doc.dump(2) + "\n";
}

}  // namespace ipctp
