#pragma once

// Hand-built instances for the unit and acceptance tests.

#include <optional>
#include <vector>

#include "ipctp/derived.hpp"
#include "ipctp/instance.hpp"
#include "ipctp/solution.hpp"

namespace ipctp::testing {

struct InstanceBuilder {
  std::vector<Vessel> vessels{{0, 1}};
  std::vector<Shipment> shipments;
  std::vector<YardLocation> locations;
  std::vector<Time> transfer;
  Geometry geometry{2, 1, 1, 1, 0};
  std::optional<Matrix<Time>> travel;  // zeros when unset

  InstanceBuilder& geo(int bays, int qcs, int ycs, int safety, Time unit_travel) {
    geometry = {bays, qcs, ycs, safety, unit_travel};
    return *this;
  }

  InstanceBuilder& weights(std::vector<std::int64_t> w) {
    vessels.clear();
    for (std::size_t k = 0; k < w.size(); ++k) vessels.push_back({static_cast<int>(k), w[k]});
    return *this;
  }

  int location(int yc, Time tt, bool fixed = false) {
    const int id = static_cast<int>(locations.size());
    YardLocation l;
    l.id = id;
    l.yc = yc;
    l.block_group = id;
    l.reserved_for = fixed ? Reservation::outbound_fixed : Reservation::inbound_available;
    locations.push_back(l);
    transfer.push_back(tt);
    return id;
  }

  int inbound(int bay, Time q, Time y, int vessel = 0) {
    Shipment s;
    s.id = static_cast<int>(shipments.size());
    s.vessel = vessel;
    s.bay = bay;
    s.qc_time = q;
    s.yc_time = y;
    shipments.push_back(s);
    return s.id;
  }

  int outbound(int bay, Time q, Time y, int location, Time tyt, int vessel = 0) {
    const int id = inbound(bay, q, y, vessel);
    auto& s = shipments.back();
    s.direction = Direction::outbound;
    s.fixed_location = location;
    s.yt_outbound_time = tyt;
    return id;
  }

  Instance build() const {
    Matrix<Time> m = travel ? *travel : Matrix<Time>(locations.size());
    return Instance(vessels, shipments, locations, geometry, m, transfer);
  }
};

/// Base case for the validator fixtures: 3 QCs over 8 bays, 2 YCs, two
/// vessels, two inbound and three outbound shipments. QC3 and YC2 stay idle
/// so every sequence family can be broken on its own.
inline Instance fixture_instance() {
  InstanceBuilder b;
  b.geo(8, 3, 2, 1, 2).weights({2, 3});
  const int l0 = b.location(1, 2);
  const int l1 = b.location(1, 2);
  b.location(2, 5);
  const int l3 = b.location(1, 0, true);
  const int l4 = b.location(1, 0, true);
  const int l5 = b.location(1, 0, true);
  b.inbound(3, 3, 4, 0);
  b.inbound(4, 10, 3, 0);
  b.outbound(5, 4, 15, l3, 2, 1);
  b.outbound(1, 3, 10, l4, 2, 1);
  b.outbound(6, 4, 5, l5, 3, 1);
  Matrix<Time> t(b.locations.size());
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t c = 0; c < t.size(); ++c)
      if (a != c) t(a, c) = (b.locations[a].yc == b.locations[c].yc) ? 1 : 3;
  t(l0, l1) = t(l1, l0) = 0;
  b.travel = t;
  return b.build();
}

inline Decisions fixture_decisions() {
  Decisions d;
  d.yard_assignment = {{0, 0}, {1, 1}};
  d.qc_sequences = {{1, {3, 0}}, {2, {1, 2, 4}}, {3, {}}};
  d.yc_sequences = {{1, {3, 2, 0, 1, 4}}, {2, {}}};
  d.interference_order = {{{0, 1, 1, 2}, Order::i_first}};
  return d;
}

struct Fixture {
  std::string family;
  std::string description;
  Solution solution;
};

/// One solution per constraint family, each breaking only that family.
std::vector<Fixture> validator_fixtures(const Instance& instance, const DerivedTables& derived);

}  // namespace ipctp::testing
