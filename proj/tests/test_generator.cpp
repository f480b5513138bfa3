#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "ipctp/derived.hpp"
#include "ipctp/error.hpp"
#include "ipctp/generator.hpp"

using namespace ipctp;

namespace {

// Pearson statistic of `counts` against the uniform distribution on [lo, hi].
double chi_square(const std::map<std::int64_t, int>& counts, std::int64_t lo, std::int64_t hi) {
  int total = 0;
  for (const auto& [v, c] : counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(hi - lo + 1);
  double stat = 0;
  for (std::int64_t v = lo; v <= hi; ++v) {
    const auto it = counts.find(v);
    const double o = it == counts.end() ? 0.0 : it->second;
    stat += (o - expected) * (o - expected) / expected;
  }
  return stat;
}

// Upper 5% points of the chi-square distribution by degrees of freedom.
double critical(std::int64_t df) {
  static const std::map<std::int64_t, double> table{{2, 5.991}, {3, 7.815}, {5, 11.070}, {36, 50.998}};
  return table.at(df);
}

GenConfig config(int shipments, int bays, double ratio, int ul, std::uint64_t seed) {
  GenConfig c;
  c.shipments = shipments;
  c.bays = bays;
  c.inbound_ratio = ratio;
  c.ul_ratio = ul;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("configuration examples") {
  for (int bays : {4, 6, 8}) {
    const auto inst = generate(config(5, bays, 0.2, 2, 1));
    CHECK(inst.qc_count() == bays / 2);
    CHECK(inst.geometry().total_bays == bays);
    CHECK(inst.geometry().safety_distance == 1);
    CHECK(inst.geometry().qc_unit_travel == 3);
    CHECK(inst.yc_count() == 6);
  }
  for (int ul : {2, 3}) {
    const auto inst = generate(config(5, 4, 0.2, ul, 9));
    CHECK(inst.inbound().size() == 1);
    CHECK(inst.available_locations().size() == static_cast<std::size_t>(ul));
  }
  CHECK(inbound_count(config(5, 4, 0.5, 2, 0)) == 3);
  CHECK(inbound_count(config(25, 4, 0.5, 2, 0)) == 13);
  CHECK(inbound_count(config(15, 4, 0.2, 2, 0)) == 3);
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(generate(config(5, 5, 0.2, 2, 0)), ConfigInvalid);
  CHECK_THROWS_AS(generate(config(0, 4, 0.2, 2, 0)), ConfigInvalid);
  CHECK_THROWS_AS(generate(config(5, 4, 1.5, 2, 0)), ConfigInvalid);
  CHECK_THROWS_AS(generate(config(5, 4, 0.2, 0, 0)), ConfigInvalid);
  auto c = config(5, 4, 0.2, 2, 0);
  c.vessels = 0;
  CHECK_THROWS_AS(generate(c), ConfigInvalid);
}

TEST_CASE("same seed gives identical instances, different replicates differ") {
  const auto c = config(10, 6, 0.5, 3, 42);
  CHECK(instance_to_json(generate(c)) == instance_to_json(generate(c)));
  const auto grid = generate_grid(7);
  const auto again = generate_grid(7);
  REQUIRE(grid.size() == 300);
  for (std::size_t k = 0; k < grid.size(); ++k)
    CHECK(instance_to_json(grid[k].instance) == instance_to_json(again[k].instance));
  CHECK(instance_to_json(grid[0].instance) != instance_to_json(grid[1].instance));
  CHECK(manifest_to_json(grid, 7) == manifest_to_json(again, 7));
}

TEST_CASE("grid covers every configuration exactly five times") {
  const auto grid = generate_grid(1);
  CHECK(grid.size() == 300);
  std::map<std::string, int> per_config;
  std::set<std::string> names, seeds;
  for (const auto& e : grid) {
    const auto& c = e.config;
    ++per_config[std::to_string(c.ul_ratio) + "/" + std::to_string(c.bays) + "/" + std::to_string(c.shipments) +
                 "/" + std::to_string(c.inbound_ratio)];
    names.insert(e.file_name);
    seeds.insert(std::to_string(c.seed));
    CHECK(e.file_name == corpus_file_name(c, e.replicate));
    const auto& inst = e.instance;
    CHECK(inst.shipment_count() == c.shipments);
    CHECK(inst.qc_count() == c.bays / 2);
    CHECK(static_cast<int>(inst.inbound().size()) == inbound_count(c));
    CHECK(inst.available_locations().size() == static_cast<std::size_t>(c.ul_ratio * inbound_count(c)));
    const auto d = build_derived(inst);
    for (int s = 0; s < inst.shipment_count(); ++s) CHECK_FALSE(d.eligible_qcs[s].empty());
  }
  CHECK(per_config.size() == 60);
  for (const auto& [k, count] : per_config) CHECK(count == 5);
  CHECK(names.size() == 300);
  CHECK(seeds.size() == 300);
  CHECK(corpus_file_name(config(15, 6, 0.5, 3, 0), 4) == "ipctp_u3_b6_s15_r50_4.json");
  CHECK(corpus_file_name(config(5, 4, 0.2, 2, 0), 0) == "ipctp_u2_b4_s5_r20_0.json");
}

TEST_CASE("sampled values follow their ranges and are uniform") {
  std::map<std::int64_t, int> containers, qc_rate, yc_rate, bays;
  std::map<Field, std::map<std::int64_t, int>> transfer;
  std::map<Field, std::int64_t> sum;
  std::map<Field, int> count;
  std::uint64_t seed = 0;
  while (containers.empty() || std::accumulate(containers.begin(), containers.end(), 0,
                                               [](int a, const auto& kv) { return a + kv.second; }) < 10000) {
    const auto inst = generate(config(25, 8, 0.5, 3, ++seed));
    for (const auto& s : inst.shipments()) {
      REQUIRE(s.qc_time % s.containers == 0);
      REQUIRE(s.yc_time % s.containers == 0);
      ++containers[s.containers];
      ++qc_rate[s.qc_time / s.containers];
      ++yc_rate[s.yc_time / s.containers];
      ++bays[s.bay];
      if (s.outbound()) {
        const auto f = inst.location(*s.fixed_location).field;
        ++transfer[f][*s.yt_outbound_time];
      }
    }
    for (int k = 0; k < inst.location_count(); ++k) {
      const auto& l = inst.location(k);
      CHECK(l.yc >= 1);
      CHECK(l.yc <= 6);
      CHECK(l.field == field_of_crane(l.yc));
      CHECK(l.block_group / 2 == l.yc - 1);
      if (l.reserved_for == Reservation::inbound_available) {
        const Time tt = inst.yt_inbound_transfer()[k];
        ++transfer[l.field][tt];
        sum[l.field] += tt;
        ++count[l.field];
      }
      for (int m = 0; m < inst.location_count(); ++m) {
        const auto& o = inst.location(m);
        const Time t = inst.yc_travel()(k, m);
        if (o.block_group == l.block_group) CHECK(t == 0);
        else if (o.yc == l.yc) CHECK(t == 1);
        else CHECK(t >= 2);
      }
    }
  }
  const auto check = [](const std::map<std::int64_t, int>& counts, std::int64_t lo, std::int64_t hi) {
    CHECK(counts.begin()->first >= lo);
    CHECK(counts.rbegin()->first <= hi);
    CHECK(counts.size() == static_cast<std::size_t>(hi - lo + 1));
    const double stat = chi_square(counts, lo, hi);
    INFO("range [" << lo << "," << hi << "] chi2 " << stat);
    CHECK(stat < critical(hi - lo));
  };
  check(containers, 4, 40);
  check(qc_rate, 2, 4);
  check(yc_rate, 2, 5);
  for (Field f : {Field::A, Field::B, Field::C}) {
    const auto [lo, hi] = transfer_range(f);
    CHECK(lo >= 5);
    CHECK(hi <= 10);
    check(transfer[f], lo, hi);
  }
  CHECK(static_cast<double>(sum[Field::C]) / count[Field::C] < static_cast<double>(sum[Field::A]) / count[Field::A]);
}

TEST_CASE("sampler on the stated ranges") {
  // One fixed stream fails a 5% test one time in twenty by design, so check
  // that the rejection rate over many independent 10^4-sample streams stays
  // near the nominal level (expected 10 of 200, sd about 3).
  for (const auto& [lo, hi] : std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 40}, {2, 5}, {2, 4}, {5, 10}}) {
    int rejected = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Sampler rng(seed);
      std::map<std::int64_t, int> counts;
      for (int k = 0; k < 10000; ++k) ++counts[rng.uniform(lo, hi)];
      CHECK(counts.begin()->first == lo);
      CHECK(counts.rbegin()->first == hi);
      rejected += chi_square(counts, lo, hi) >= critical(hi - lo);
    }
    INFO("range [" << lo << "," << hi << "] rejected " << rejected << " of 200");
    CHECK(rejected <= 22);
  }
  Sampler a(5), b(5);
  for (int k = 0; k < 100; ++k) CHECK(a.uniform(0, 1'000'000) == b.uniform(0, 1'000'000));
}

TEST_CASE("vessels split the bays contiguously") {
  auto c = config(20, 8, 0.5, 2, 3);
  c.vessels = 2;
  const auto inst = generate(c);
  CHECK(inst.vessel_count() == 2);
  for (const auto& s : inst.shipments()) CHECK(s.vessel == (s.bay <= 4 ? 0 : 1));
  for (const auto& v : inst.vessels()) CHECK(v.weight == 1);
}
