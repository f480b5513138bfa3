#include "ipctp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include <json.hpp>

#include "ipctp/error.hpp"

namespace ipctp {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix(h ^ splitmix(v)); }

int field_rank(Field f) {
  switch (f) {
    case Field::A: return 0;
    case Field::B: return 1;
    case Field::C: return 2;
  }
  return 0;
}

}  // namespace

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::pair<std::int64_t, std::int64_t> transfer_range(Field field) {
  switch (field) {
    case Field::C: return {5, 7};
    case Field::B: return {6, 8};
    case Field::A: return {8, 10};
  }
  return {gen_ranges::transfer_lo, gen_ranges::transfer_hi};
}

Field field_of_crane(int yc) {
  if (yc <= 2) return Field::A;
  if (yc <= 4) return Field::B;
  return Field::C;
}

int inbound_count(const GenConfig& config) {
  return static_cast<int>(std::lround(config.inbound_ratio * config.shipments));
}

void check_config(const GenConfig& c) {
  if (c.bays < 2 || c.bays % 2 != 0) throw ConfigInvalid("bays must be a positive even number");
  if (c.shipments < 1) throw ConfigInvalid("shipments must be positive");
  if (c.ul_ratio < 1) throw ConfigInvalid("ul_ratio must be positive");
  if (!(c.inbound_ratio >= 0.0 && c.inbound_ratio <= 1.0))
    throw ConfigInvalid("inbound_ratio must lie in [0, 1]");
  if (c.vessels < 1 || c.vessels > c.bays) throw ConfigInvalid("vessels must lie in [1, bays]");
  if (c.instances_per_config < 1) throw ConfigInvalid("instances_per_config must be positive");
}

Instance generate(const GenConfig& config) {
  using namespace gen_ranges;
  check_config(config);
  Sampler rng(config.seed);
  const int n = config.shipments;
  const int n_in = inbound_count(config);

  std::vector<Vessel> vessels;
  for (int v = 0; v < config.vessels; ++v) vessels.push_back({v, 1});

  std::vector<Shipment> shipments(n);
  for (int i = 0; i < n; ++i) {
    auto& s = shipments[i];
    s.id = i;
    s.bay = static_cast<int>(rng.uniform(1, config.bays));
    s.vessel = (s.bay - 1) * config.vessels / config.bays;
    s.containers = static_cast<int>(rng.uniform(containers_lo, containers_hi));
    s.qc_time = rng.uniform(qc_rate_lo, qc_rate_hi) * s.containers;
    s.yc_time = rng.uniform(yc_rate_lo, yc_rate_hi) * s.containers;
  }

  // Inbound subset by partial Fisher-Yates.
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  for (int k = 0; k < n_in; ++k) std::swap(ids[k], ids[rng.uniform(k, n - 1)]);
  std::vector<char> is_inbound(n, 0);
  for (int k = 0; k < n_in; ++k) is_inbound[ids[k]] = 1;
  std::vector<int> outbound;
  for (int i = 0; i < n; ++i) {
    shipments[i].direction = is_inbound[i] ? Direction::inbound : Direction::outbound;
    if (!is_inbound[i]) outbound.push_back(i);
  }

  const int location_total = config.ul_ratio * n_in + static_cast<int>(outbound.size());
  std::vector<YardLocation> locations(location_total);
  std::vector<Time> transfer(location_total);
  for (int k = 0; k < location_total; ++k) {
    auto& l = locations[k];
    l.id = k;
    l.yc = static_cast<int>(rng.uniform(1, yard_cranes));
    l.block_group = (l.yc - 1) * 2 + static_cast<int>(rng.uniform(0, 1));
    l.field = field_of_crane(l.yc);
    const auto [lo, hi] = transfer_range(l.field);
    transfer[k] = rng.uniform(lo, hi);
  }

  // Outbound shipments sit on distinct uniformly drawn locations.
  std::vector<int> order(location_total);
  for (int k = 0; k < location_total; ++k) order[k] = k;
  for (std::size_t k = 0; k < outbound.size(); ++k)
    std::swap(order[k], order[rng.uniform(static_cast<std::int64_t>(k), location_total - 1)]);
  for (std::size_t k = 0; k < outbound.size(); ++k) {
    auto& s = shipments[outbound[k]];
    const int loc = order[k];
    locations[loc].reserved_for = Reservation::outbound_fixed;
    s.fixed_location = loc;
    s.yt_outbound_time = transfer[loc];
  }

  Matrix<Time> travel(location_total);
  for (int a = 0; a < location_total; ++a) {
    for (int b = 0; b < location_total; ++b) {
      const auto& la = locations[a];
      const auto& lb = locations[b];
      Time t;
      if (la.block_group == lb.block_group) t = 0;
      else if (la.yc == lb.yc) t = 1;
      else t = 2 + 2 * std::abs(field_rank(la.field) - field_rank(lb.field));
      travel(a, b) = t;
    }
  }

  Geometry g;
  g.total_bays = config.bays;
  g.qc_count = config.bays / 2;
  g.yc_count = yard_cranes;
  g.safety_distance = safety_distance;
  g.qc_unit_travel = qc_unit_travel;
  return Instance(std::move(vessels), std::move(shipments), std::move(locations), g,
                  std::move(travel), std::move(transfer));
}

std::uint64_t derive_seed(std::uint64_t base_seed, const GenConfig& c, int replicate) {
  std::uint64_t h = splitmix(base_seed);
  h = mix(h, static_cast<std::uint64_t>(c.ul_ratio));
  h = mix(h, static_cast<std::uint64_t>(c.bays));
  h = mix(h, static_cast<std::uint64_t>(c.shipments));
  h = mix(h, static_cast<std::uint64_t>(std::llround(c.inbound_ratio * 1000)));
  h = mix(h, static_cast<std::uint64_t>(c.vessels));
  return mix(h, static_cast<std::uint64_t>(replicate));
}

std::string corpus_file_name(const GenConfig& c, int replicate) {
  return "ipctp_u" + std::to_string(c.ul_ratio) + "_b" + std::to_string(c.bays) + "_s" +
         std::to_string(c.shipments) + "_r" + std::to_string(std::lround(c.inbound_ratio * 100)) +
         "_" + std::to_string(replicate) + ".json";
}

std::vector<CorpusEntry> generate_grid(std::uint64_t base_seed, int replicates, int vessels) {
  std::vector<CorpusEntry> corpus;
  for (int ul : {2, 3})
    for (int bays : {4, 6, 8})
      for (int shipments : {5, 10, 15, 20, 25})
        for (double ratio : {0.2, 0.5})
          for (int rep = 0; rep < replicates; ++rep) {
            GenConfig c;
            c.ul_ratio = ul;
            c.bays = bays;
            c.shipments = shipments;
            c.inbound_ratio = ratio;
            c.vessels = std::min(vessels, bays);
            c.instances_per_config = replicates;
            c.seed = derive_seed(base_seed, c, rep);
            corpus.push_back({c, rep, corpus_file_name(c, rep), generate(c)});
          }
  return corpus;
}

std::string manifest_to_json(const std::vector<CorpusEntry>& corpus, std::uint64_t base_seed) {
  nlohmann::json doc;
  doc["base_seed"] = base_seed;
  auto& list = doc["instances"] = nlohmann::json::array();
  for (const auto& e : corpus) {
    list.push_back({{"file", e.file_name},
                    {"ul_ratio", e.config.ul_ratio},
                    {"bays", e.config.bays},
                    {"shipments", e.config.shipments},
                    {"inbound_ratio", e.config.inbound_ratio},
                    {"vessels", e.config.vessels},
                    {"replicate", e.replicate},
                    {"seed", e.config.seed}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace ipctp
