#include <doctest.h>

#include <set>

#include "ipctp/derived.hpp"
#include "ipctp/error.hpp"
#include "ipctp/instance.hpp"
#include "random_instance.hpp"
#include "support.hpp"

using namespace ipctp;
using ipctp::testing::InstanceBuilder;

namespace {

// Eligibility by placing all cranes: crane q can stand at `bay` iff cranes
// 1..q-1 fit to its left and q+1..QC_T to its right at safe spacing.
std::set<int> eligible_by_placement(int bay, int total, int qcs, int safety) {
  std::set<int> out;
  for (int q = 1; q <= qcs; ++q) {
    int left = bay, right = bay;
    bool ok = true;
    for (int k = q - 1; k >= 1; --k) {
      left -= safety + 1;
      ok = ok && left >= 1;
    }
    for (int k = q + 1; k <= qcs; ++k) {
      right += safety + 1;
      ok = ok && right <= total;
    }
    if (ok) out.insert(q);
  }
  return out;
}

Instance two_ship(int bay_a, int bay_b, int bays = 6, int qcs = 2) {
  InstanceBuilder b;
  b.geo(bays, qcs, 1, 1, 3);
  const int l = b.location(1, 1);
  b.location(1, 1);
  b.inbound(bay_a, 2, 2);
  b.inbound(bay_b, 2, 2);
  (void)l;
  return b.build();
}

}  // namespace

TEST_CASE("eligible cranes follow the crane placement picture") {
  CHECK(eligible_qcs(1, 9, 3, 1) == std::vector<int>{1});
  CHECK(eligible_qcs(8, 9, 3, 1) == std::vector<int>{3});
  CHECK(eligible_qcs(3, 9, 3, 1) == std::vector<int>{1, 2});
  CHECK(eligible_qcs(5, 9, 3, 1) == std::vector<int>{1, 2, 3});
  for (int total = 1; total <= 12; ++total)
    for (int qcs = 1; qcs <= 4; ++qcs)
      for (int safety = 0; safety <= 2; ++safety)
        for (int bay = 1; bay <= total; ++bay) {
          const auto expect = eligible_by_placement(bay, total, qcs, safety);
          if (expect.empty()) {
            CHECK_THROWS_AS(eligible_qcs(bay, total, qcs, safety), NoEligibleCrane);
          } else {
            const auto got = eligible_qcs(bay, total, qcs, safety);
            CHECK(std::set<int>(got.begin(), got.end()) == expect);
          }
        }
}

TEST_CASE("eligibility never shrinks when bays are added") {
  for (int qcs = 1; qcs <= 3; ++qcs)
    for (int total = 2 * qcs; total <= 10; ++total)
      for (int bay = 1; bay <= total; ++bay) {
        const auto small = eligible_qcs(bay, total, qcs, 1);
        const auto large = eligible_qcs(bay, total + 1, qcs, 1);
        for (int q : small) CHECK(std::find(large.begin(), large.end(), q) != large.end());
      }
}

TEST_CASE("crane distance") {
  CHECK(crane_min_distance(1, 2, 1) == 2);
  CHECK(crane_min_distance(3, 3, 1) == 0);
  CHECK(crane_min_distance(1, 3, 1) == 4);
  CHECK(crane_min_distance(3, 1, 1) == 4);
}

TEST_CASE("interference time cases") {
  CHECK(interference_time(5, 4, 1, 2, 1, 3) == 9);
  CHECK(interference_time(1, 9, 1, 3, 1, 3) == 0);
  CHECK(interference_time(2, 4, 1, 2, 1, 3) == 0);   // b_i == b_j - distance
  CHECK(interference_time(4, 5, 2, 1, 1, 3) == 9);   // mirrored case
  for (int bi = 1; bi <= 8; ++bi)
    for (int bj = 1; bj <= 8; ++bj)
      for (int v = 1; v <= 3; ++v) {
        CHECK(interference_time(bi, bj, v, v, 1, 3) == 0);
        for (int w = 1; w <= 3; ++w)
          CHECK(interference_time(bi, bj, v, w, 1, 3) == interference_time(bj, bi, w, v, 1, 3));
      }
}

TEST_CASE("interference set") {
  SUBCASE("single shipment has none") {
    InstanceBuilder b;
    b.geo(4, 2, 1, 1, 3);
    b.location(1, 1);
    b.inbound(2, 1, 1);
    CHECK(build_derived(b.build()).interference_set.empty());
  }
  SUBCASE("bays 4 and 5 interfere in both crane orders") {
    const auto d = build_derived(two_ship(4, 5, 8));
    std::set<std::array<int, 4>> keys;
    for (const auto& t : d.interference_set) keys.insert(t.key());
    CHECK(keys.count({0, 1, 1, 2}) == 1);
    CHECK(keys.count({0, 1, 2, 1}) == 1);
    CHECK(d.interference(0, 1, 1, 2) == 3 * (4 - 5 + 2));
    CHECK(d.interference(0, 1, 2, 1) == 3 * (5 - 4 + 2));
  }
  SUBCASE("shipments at the two ends of a nine-bay vessel never interfere") {
    CHECK(build_derived(two_ship(1, 9, 9, 3)).interference_set.empty());
  }
  SUBCASE("every tuple is ordered, positive and eligible") {
    ipctp::testing::RandomShape shape;
    shape.shipments = 6;
    shape.qcs = 3;
    shape.bays = 8;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = ipctp::testing::random_instance(seed, shape);
      const auto d = build_derived(inst);
      for (const auto& t : d.interference_set) {
        CHECK(t.i < t.j);
        CHECK(t.delta > 0);
        CHECK(t.delta == interference_time(inst, t.i, t.j, t.v, t.w));
        const auto& ei = d.eligible_qcs[t.i];
        const auto& ej = d.eligible_qcs[t.j];
        CHECK(std::find(ei.begin(), ei.end(), t.v) != ei.end());
        CHECK(std::find(ej.begin(), ej.end(), t.w) != ej.end());
      }
      CHECK(derived_to_json(d) == derived_to_json(build_derived(inst)));
    }
  }
}

TEST_CASE("derived travel matrices") {
  const auto inst = two_ship(2, 5);
  const auto d = build_derived(inst);
  CHECK(d.qc_empty_travel(0, 1) == 9);
  CHECK(d.qc_empty_travel(1, 0) == 9);
  CHECK(d.qc_empty_travel(0, 0) == 0);
  CHECK(d.yc_empty_travel == inst.yc_travel());
  CHECK(d.crane_min_distance(0, 1) == 2);
}

TEST_CASE("instance invariants are enforced") {
  const auto base = [] {
    InstanceBuilder b;
    b.geo(4, 2, 2, 1, 3);
    b.location(1, 5);
    const int f = b.location(2, 0, true);
    b.inbound(1, 4, 4);
    b.outbound(3, 4, 4, f, 2);
    return b;
  };
  CHECK_NOTHROW(base().build());
  {
    auto b = base();
    b.shipments[0].bay = 5;
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
  {
    auto b = base();
    b.vessels[0].weight = 0;
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
  {
    auto b = base();
    b.shipments[1].yt_outbound_time.reset();
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
  {
    auto b = base();
    b.shipments[1].fixed_location = 0;  // not reserved for outbound
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
  {
    auto b = base();
    b.shipments[0].qc_time = 0;
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
  {
    auto b = base();
    Matrix<Time> t(2);
    t(0, 1) = 2;
    t(1, 0) = 3;
    b.travel = t;
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
  {
    auto b = base();
    b.locations[1].yc = 3;
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
  {
    auto b = base();
    b.transfer.pop_back();
    CHECK_THROWS_AS(b.build(), InstanceInvalid);
  }
}

TEST_CASE("instance JSON round trip and diagnostics") {
  const auto inst = ipctp::testing::fixture_instance();
  const auto text = instance_to_json(inst);
  const auto back = instance_from_json(text);
  CHECK(instance_to_json(back) == text);
  CHECK(back.inbound() == inst.inbound());
  CHECK(back.available_locations() == inst.available_locations());

  auto broken = text;
  const auto pos = broken.find("\"bay\": 3");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 8, "\"bay\": \"x\"");
  try {
    instance_from_json(broken);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("shipments[0].bay") != std::string::npos);
  }
  try {
    instance_from_json("{\n  \"vessels\": [\n  oops\n}");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
