#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ipctp/instance.hpp"

namespace ipctp {

struct GenConfig {
  int ul_ratio = 2;            // available inbound locations per inbound shipment
  int bays = 4;
  int shipments = 5;
  double inbound_ratio = 0.2;
  int vessels = 1;
  std::uint64_t seed = 0;
  int instances_per_config = 5;
};

/// Throws ConfigInvalid when the configuration cannot produce an instance.
void check_config(const GenConfig& config);

/// std::mt19937_64 with its own rejection sampling, since the standard
/// distributions are not reproducible across library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the closed range [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Closed ranges of the generator's draws.
namespace gen_ranges {
inline constexpr std::int64_t containers_lo = 4, containers_hi = 40;
inline constexpr std::int64_t qc_rate_lo = 2, qc_rate_hi = 4;
inline constexpr std::int64_t yc_rate_lo = 2, yc_rate_hi = 5;
inline constexpr std::int64_t transfer_lo = 5, transfer_hi = 10;
inline constexpr Time qc_unit_travel = 3;
inline constexpr int safety_distance = 1;
inline constexpr int yard_cranes = 6;
}  // namespace gen_ranges

/// Range of the yard-truck transfer draw for a field; C is nearest the quay.
std::pair<std::int64_t, std::int64_t> transfer_range(Field field);

/// Field served by a yard crane: cranes 1-2 work field A, 3-4 B, 5-6 C.
Field field_of_crane(int yc);

int inbound_count(const GenConfig& config);

Instance generate(const GenConfig& config);

/// Sub-seed of one replicate of a configuration.
std::uint64_t derive_seed(std::uint64_t base_seed, const GenConfig& config, int replicate);

struct CorpusEntry {
  GenConfig config;  // seed holds the derived sub-seed
  int replicate = 0;
  std::string file_name;
  Instance instance;
};

/// The full experimental grid: ul ratios {2,3} x bays {4,6,8} x shipments
/// {5,...,25} x inbound ratios {0.2,0.5} x replicates.
std::vector<CorpusEntry> generate_grid(std::uint64_t base_seed, int replicates = 5, int vessels = 1);

std::string corpus_file_name(const GenConfig& config, int replicate);

/// JSON manifest listing every entry with its configuration and seed.
std::string manifest_to_json(const std::vector<CorpusEntry>& corpus, std::uint64_t base_seed);

}  // namespace ipctp
