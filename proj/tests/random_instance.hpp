#pragma once

// Random small instances with overlapping QC eligibility, so interference
// tuples are common. Used by property tests; the generator proper always
// gives each bay a single eligible crane.

#include <algorithm>
#include <cstdint>

#include "ipctp/generator.hpp"
#include "ipctp/instance.hpp"

namespace ipctp::testing {

struct RandomShape {
  int shipments = 4;
  int inbound = 2;
  int spare_locations = 1;
  int qcs = 2;
  int bays = 6;
  int safety = 1;
  int ycs = 2;
  int vessels = 2;
};

inline Instance random_instance(std::uint64_t seed, const RandomShape& shape) {
  Sampler rng(seed);
  std::vector<Vessel> vessels;
  for (int v = 0; v < shape.vessels; ++v) vessels.push_back({v, rng.uniform(1, 3)});

  const int n = shape.shipments;
  const int outbound = n - shape.inbound;
  const int locations = shape.inbound + shape.spare_locations + outbound;
  std::vector<YardLocation> locs(locations);
  for (int k = 0; k < locations; ++k) {
    locs[k].id = k;
    locs[k].yc = static_cast<int>(rng.uniform(1, shape.ycs));
    locs[k].block_group = k;
    locs[k].field = Field::B;
  }
  std::vector<Shipment> ships(n);
  int next_fixed = shape.inbound + shape.spare_locations;
  for (int i = 0; i < n; ++i) {
    auto& s = ships[i];
    s.id = i;
    s.vessel = static_cast<int>(rng.uniform(0, shape.vessels - 1));
    s.bay = static_cast<int>(rng.uniform(1, shape.bays));
    s.containers = static_cast<int>(rng.uniform(1, 5));
    s.qc_time = rng.uniform(1, 9);
    s.yc_time = rng.uniform(1, 9);
    if (i >= shape.inbound) {
      s.direction = Direction::outbound;
      s.fixed_location = next_fixed;
      locs[next_fixed].reserved_for = Reservation::outbound_fixed;
      ++next_fixed;
      s.yt_outbound_time = rng.uniform(0, 6);
    }
  }
  std::vector<Time> tt(locations);
  for (auto& t : tt) t = rng.uniform(0, 6);
  Matrix<Time> travel(locations);
  for (int a = 0; a < locations; ++a)
    for (int b = a + 1; b < locations; ++b) travel(a, b) = travel(b, a) = rng.uniform(0, 4);
  Geometry g;
  g.total_bays = shape.bays;
  g.qc_count = shape.qcs;
  g.yc_count = shape.ycs;
  g.safety_distance = shape.safety;
  g.qc_unit_travel = rng.uniform(0, 3);
  return Instance(std::move(vessels), std::move(ships), std::move(locs), g, std::move(travel), std::move(tt));
}

}  // namespace ipctp::testing

#include <map>
#include <numeric>

#include "ipctp/derived.hpp"
#include "ipctp/schedule.hpp"
#include "ipctp/solution.hpp"

namespace ipctp::testing {

/// Uniformly drawn structurally complete decisions; orders may be cyclic.
inline Decisions random_decisions(const Instance& inst, const DerivedTables& d, Sampler& rng) {
  Decisions out;
  std::vector<int> free = inst.available_locations();
  for (int s : inst.inbound()) {
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(free.size()) - 1));
    out.yard_assignment[s] = free[k];
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(k));
  }
  for (int q = 1; q <= inst.qc_count(); ++q) out.qc_sequences[q] = {};
  for (int c = 1; c <= inst.yc_count(); ++c) out.yc_sequences[c] = {};
  std::vector<int> order(inst.shipment_count());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t k = order.size(); k > 1; --k)
    std::swap(order[k - 1], order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1))]);
  for (int s : order) {
    const auto& e = d.eligible_qcs[s];
    out.qc_sequences[e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(e.size()) - 1))]].push_back(s);
    const auto& sh = inst.shipment(s);
    const int loc = sh.inbound() ? out.yard_assignment[s] : *sh.fixed_location;
    out.yc_sequences[inst.yc_of(loc)].push_back(s);
  }
  for (const auto& t : active_interferences(d, out.qc_assignment()))
    out.interference_order[t.key()] = rng.uniform(0, 1) ? Order::i_first : Order::j_first;
  return out;
}

}  // namespace ipctp::testing
