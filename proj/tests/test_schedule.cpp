#include <doctest.h>

#include <numeric>

#include "ipctp/error.hpp"
#include "ipctp/gantt.hpp"
#include "ipctp/schedule.hpp"
#include "ipctp/validate.hpp"
#include "random_instance.hpp"
#include "support.hpp"

using namespace ipctp;
using ipctp::testing::InstanceBuilder;

namespace {

struct Starts {
  std::vector<Time> qc, yc;
};

// Start times by repeated relaxation of every constraint written directly
// from the model; nullopt when no fixpoint exists (a positive cycle).
std::optional<Starts> relax(const Instance& inst, const DerivedTables& d, const Decisions& dec) {
  const int n = inst.shipment_count();
  std::vector<int> loc(n);
  for (const auto& s : inst.shipments()) loc[s.id] = s.inbound() ? dec.yard_assignment.at(s.id) : *s.fixed_location;
  Starts st{std::vector<Time>(n, 0), std::vector<Time>(n, 0)};
  const auto raise = [](Time& x, Time v) {
    if (v > x) {
      x = v;
      return true;
    }
    return false;
  };
  for (int round = 0; round <= 4 * n + 2; ++round) {
    bool changed = false;
    for (const auto& s : inst.shipments()) {
      if (s.inbound())
        changed |= raise(st.yc[s.id], st.qc[s.id] + s.qc_time + inst.yt_inbound_transfer()[loc[s.id]]);
      else
        changed |= raise(st.qc[s.id], st.yc[s.id] + s.yc_time + *s.yt_outbound_time);
    }
    for (const auto& [q, seq] : dec.qc_sequences)
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const int a = seq[k - 1], b = seq[k];
        const Time travel = inst.geometry().qc_unit_travel * std::abs(inst.shipment(a).bay - inst.shipment(b).bay);
        changed |= raise(st.qc[b], st.qc[a] + inst.shipment(a).qc_time + travel);
      }
    for (const auto& [c, seq] : dec.yc_sequences)
      for (std::size_t k = 1; k < seq.size(); ++k) {
        const int a = seq[k - 1], b = seq[k];
        changed |= raise(st.yc[b], st.yc[a] + inst.shipment(a).yc_time + inst.yc_travel()(loc[a], loc[b]));
      }
    for (const auto& [key, order] : dec.interference_order) {
      const int f = order == Order::i_first ? key[0] : key[1];
      const int g = order == Order::i_first ? key[1] : key[0];
      changed |= raise(st.qc[g], st.qc[f] + inst.shipment(f).qc_time + d.interference(key[0], key[1], key[2], key[3]));
    }
    if (!changed) return st;
  }
  return std::nullopt;
}

Solution shifted(const Solution& s, bool qc, int id, Time by) {
  Solution out = s;
  (qc ? out.qc_start : out.yc_start)[id] += by;
  return out;
}

}  // namespace

TEST_CASE("single chains") {
  SUBCASE("outbound") {
    InstanceBuilder b;
    const int f = b.location(1, 0, true);
    b.outbound(1, 8, 10, f, 5);
    const auto inst = b.build();
    const auto d = build_derived(inst);
    Decisions dec;
    dec.qc_sequences[1] = {0};
    dec.yc_sequences[1] = {0};
    const auto s = compute_schedule(inst, d, dec);
    CHECK(s.yc_start.at(0) == 0);
    CHECK(s.qc_start.at(0) == 15);
    CHECK(s.per_vessel_completion.at(0) == 23);
    CHECK(s.objective == 23);
  }
  SUBCASE("inbound") {
    InstanceBuilder b;
    b.location(1, 5);
    b.inbound(1, 8, 10);
    const auto inst = b.build();
    const auto d = build_derived(inst);
    Decisions dec;
    dec.yard_assignment[0] = 0;
    dec.qc_sequences[1] = {0};
    dec.yc_sequences[1] = {0};
    const auto s = compute_schedule(inst, d, dec);
    CHECK(s.qc_start.at(0) == 0);
    CHECK(s.yc_start.at(0) == 13);
    CHECK(s.per_vessel_completion.at(0) == 23);
    CHECK(s.yt_time.at(0) == 5);
  }
}

TEST_CASE("interference order delays the second shipment") {
  InstanceBuilder b;
  b.geo(8, 2, 1, 1, 3);
  b.location(1, 1);
  b.location(1, 1);
  b.inbound(5, 4, 2);
  b.inbound(4, 4, 2);
  const auto inst = b.build();
  const auto d = build_derived(inst);
  REQUIRE(d.interference(0, 1, 1, 2) == 9);
  Decisions dec;
  dec.yard_assignment = {{0, 0}, {1, 1}};
  dec.qc_sequences = {{1, {0}}, {2, {1}}};
  dec.yc_sequences = {{1, {0, 1}}};
  dec.interference_order[{0, 1, 1, 2}] = Order::i_first;
  const auto s = compute_schedule(inst, d, dec);
  CHECK(s.qc_start.at(1) >= 13);
  CHECK(s.qc_start.at(1) == 13);
  CHECK(validate(inst, d, s).empty());
}

TEST_CASE("contradictory orders are cyclic") {
  InstanceBuilder b;
  b.geo(8, 2, 1, 1, 3);
  b.location(1, 1);
  const int f = b.location(1, 0, true);
  b.inbound(5, 4, 2);
  b.outbound(4, 4, 2, f, 1);
  const auto inst = b.build();
  const auto d = build_derived(inst);
  Decisions dec;
  dec.yard_assignment = {{0, 0}};
  dec.qc_sequences = {{1, {0}}, {2, {1}}};
  dec.yc_sequences = {{1, {0, 1}}};
  dec.interference_order[{0, 1, 1, 2}] = Order::j_first;
  CHECK_THROWS_AS(compute_schedule(inst, d, dec), CyclicOrdering);
  dec.interference_order[{0, 1, 1, 2}] = Order::i_first;
  CHECK_NOTHROW(compute_schedule(inst, d, dec));
}

TEST_CASE("structurally incomplete decisions are rejected") {
  const auto inst = ipctp::testing::fixture_instance();
  const auto d = build_derived(inst);
  const auto good = ipctp::testing::fixture_decisions();
  CHECK_NOTHROW(compute_schedule(inst, d, good));
  const auto rejects = [&](auto edit) {
    Decisions dec = good;
    edit(dec);
    CHECK_THROWS_AS(compute_schedule(inst, d, dec), InvalidDecisions);
  };
  rejects([](Decisions& x) { x.yard_assignment[1] = 0; });
  rejects([](Decisions& x) { x.yard_assignment.erase(0); });
  rejects([](Decisions& x) { x.yard_assignment[1] = 3; });
  rejects([](Decisions& x) { x.qc_sequences[1] = {0}; });
  rejects([](Decisions& x) { x.qc_sequences[3] = {3}; x.qc_sequences[1] = {0}; });
  rejects([](Decisions& x) { x.yc_sequences[2] = {0}; x.yc_sequences[1] = {3, 2, 1, 4}; });
  rejects([](Decisions& x) { x.interference_order.clear(); });
}

TEST_CASE("objective weighting") {
  InstanceBuilder b;
  b.weights({2, 3});
  b.location(1, 0);
  b.location(1, 0);
  b.inbound(1, 4, 6, 0);
  b.inbound(2, 4, 6, 1);
  const auto inst = b.build();
  Solution s;
  s.qc_start = {{0, 0}, {1, 0}};
  s.yc_start = {{0, 4}, {1, 14}};
  CHECK(objective_of(inst, s) == 2 * 10 + 3 * 20);

  InstanceBuilder one;
  one.location(1, 0);
  one.inbound(1, 50, 50);
  Solution t;
  t.qc_start = {{0, 0}};
  t.yc_start = {{0, 50}};
  CHECK(objective_of(one.build(), t) == 100);

  InstanceBuilder empty_vessel;
  empty_vessel.weights({1, 7});
  empty_vessel.location(1, 0);
  empty_vessel.inbound(1, 5, 5, 0);
  CHECK(objective_of(empty_vessel.build(), t) == 55);
}

TEST_CASE("random decisions: longest path, validation, minimality") {
  ipctp::testing::RandomShape shape;
  shape.shipments = 6;
  shape.inbound = 3;
  shape.qcs = 2;
  shape.bays = 6;
  int acyclic = 0, cyclic = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = ipctp::testing::random_instance(seed, shape);
    const auto d = build_derived(inst);
    Sampler rng(seed * 7 + 1);
    const auto dec = ipctp::testing::random_decisions(inst, d, rng);
    const auto expect = relax(inst, d, dec);
    if (!expect) {
      ++cyclic;
      CHECK_THROWS_AS(compute_schedule(inst, d, dec), CyclicOrdering);
      continue;
    }
    ++acyclic;
    const auto s = compute_schedule(inst, d, dec);
    for (int k = 0; k < inst.shipment_count(); ++k) {
      CHECK(s.qc_start.at(k) == expect->qc[k]);
      CHECK(s.yc_start.at(k) == expect->yc[k]);
    }
    CHECK(objective_of(inst, s) == s.objective);
    REQUIRE(validate(inst, d, s).empty());
    for (int k = 0; k < inst.shipment_count(); ++k) {
      CHECK_FALSE(validate(inst, d, shifted(s, true, k, -1)).empty());
      CHECK_FALSE(validate(inst, d, shifted(s, false, k, -1)).empty());
    }
  }
  CHECK(acyclic > 100);
  CHECK(cyclic > 0);
}

TEST_CASE("heavier arcs never move a start earlier") {
  ipctp::testing::RandomShape shape;
  shape.shipments = 5;
  shape.inbound = 2;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = ipctp::testing::random_instance(seed, shape);
    const auto d = build_derived(inst);
    Sampler rng(seed + 11);
    auto dec = ipctp::testing::random_decisions(inst, d, rng);
    Solution base;
    try {
      base = compute_schedule(inst, d, dec);
    } catch (const CyclicOrdering&) {
      continue;
    }
    auto g = inst.geometry();
    g.qc_unit_travel += 1;
    const Instance slower(inst.vessels(), inst.shipments(), inst.yard_locations(), g, inst.yc_travel(),
                          inst.yt_inbound_transfer());
    const auto d2 = build_derived(slower);
    // New tuples keep the order the base schedule already has.
    dec.interference_order.clear();
    for (const auto& t : active_interferences(d2, dec.qc_assignment()))
      dec.interference_order[t.key()] =
          base.qc_start.at(t.i) <= base.qc_start.at(t.j) ? Order::i_first : Order::j_first;
    Solution more;
    try {
      more = compute_schedule(slower, d2, dec);
    } catch (const CyclicOrdering&) {
      continue;
    }
    for (int k = 0; k < inst.shipment_count(); ++k) {
      CHECK(more.qc_start.at(k) >= base.qc_start.at(k));
      CHECK(more.yc_start.at(k) >= base.yc_start.at(k));
    }
  }
}

TEST_CASE("objective does not depend on shipment labels") {
  ipctp::testing::RandomShape shape;
  shape.shipments = 5;
  shape.inbound = 2;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = ipctp::testing::random_instance(seed, shape);
    const auto d = build_derived(inst);
    Sampler rng(seed + 3);
    const auto dec = ipctp::testing::random_decisions(inst, d, rng);
    Solution s;
    try {
      s = compute_schedule(inst, d, dec);
    } catch (const CyclicOrdering&) {
      continue;
    }
    // Reverse the ids: new id = n-1-old.
    const int n = inst.shipment_count();
    const auto map = [n](int k) { return n - 1 - k; };
    std::vector<Shipment> ships(n);
    for (const auto& sh : inst.shipments()) {
      ships[map(sh.id)] = sh;
      ships[map(sh.id)].id = map(sh.id);
    }
    const Instance relabeled(inst.vessels(), ships, inst.yard_locations(), inst.geometry(), inst.yc_travel(),
                             inst.yt_inbound_transfer());
    const auto d2 = build_derived(relabeled);
    Decisions dec2;
    for (const auto& [k, l] : dec.yard_assignment) dec2.yard_assignment[map(k)] = l;
    for (const auto& [c, seq] : dec.qc_sequences)
      for (int k : seq) dec2.qc_sequences[c].push_back(map(k));
    for (const auto& [c, seq] : dec.yc_sequences)
      for (int k : seq) dec2.yc_sequences[c].push_back(map(k));
    for (const auto& [key, o] : dec.interference_order) {
      // (i, j, v, w) becomes (j', i', w, v) once i' > j'.
      const TupleKey k2{map(key[1]), map(key[0]), key[3], key[2]};
      dec2.interference_order[k2] = o == Order::i_first ? Order::j_first : Order::i_first;
    }
    CHECK(compute_schedule(relabeled, d2, dec2).objective == s.objective);
  }
}

TEST_CASE("solution JSON round trip") {
  const auto inst = ipctp::testing::fixture_instance();
  const auto d = build_derived(inst);
  auto s = compute_schedule(inst, d, ipctp::testing::fixture_decisions());
  s.status = Status::optimal;
  const auto text = solution_to_json(s);
  const auto back = solution_from_json(text);
  CHECK(solution_to_json(back) == text);
  CHECK(back.qc_start == s.qc_start);
  CHECK(back.interference_order == s.interference_order);
  CHECK(back.yc_empty == s.yc_empty);
  CHECK(back.status == Status::optimal);
  CHECK(validate(inst, d, back).empty());
}

TEST_CASE("gantt rendering") {
  const auto inst = ipctp::testing::fixture_instance();
  const auto d = build_derived(inst);
  const auto s = compute_schedule(inst, d, ipctp::testing::fixture_decisions());
  const auto text = gantt_text(inst, s, 60);
  for (const char* lane : {"QC1", "QC2", "QC3", "YC1", "YC2"}) CHECK(text.find(lane) != std::string::npos);
  CHECK(text.find("objective " + std::to_string(s.objective)) != std::string::npos);
  const auto svg = gantt_svg(inst, s);
  CHECK(svg.starts_with("<svg"));
  CHECK(svg.find("</svg>") != std::string::npos);
}
