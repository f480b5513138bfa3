#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipctp/instance.hpp"
#include "ipctp/solution.hpp"

namespace ipctp {

struct BenchInput {
  std::string config_id;   // e.g. "u2_b4_s5_r20"
  int replicate = 0;
  std::string name;        // file or label
  Instance instance;
};

struct Budgets {
  double short_run = 600.0;
  double long_run = 3600.0;
};

struct RunOutcome {
  std::optional<Objective> objective;
  Objective lower_bound = 0;
  Status status = Status::unknown;
  double wall_time = 0.0;
  std::optional<double> gap_percent;
  std::string error;       // empty unless the run failed
};

struct BenchRecord {
  std::string config_id;
  int replicate = 0;
  std::string name;
  RunOutcome short_run;
  RunOutcome long_run;
  std::optional<double> rpd_percent;
};

struct BenchRow {
  std::string config_id;
  int replicates = 0;
  std::optional<double> mean_objective;  // short-budget runs with a solution
  double mean_wall_time = 0.0;
  std::optional<double> gap_percent;     // mean over short runs with a solution
  int optimal_count = 0;
  int infeasible_count = 0;              // short runs without any solution
  int error_count = 0;
  std::optional<double> rpd_percent;     // mean over instances solved under both budgets
};

/// Relative deviation of a short-budget objective from the long-budget one.
double rpd(Objective short_objective, Objective long_objective);

/// Solves every input once per budget. Instances run `parallel` at a time;
/// each solve uses `workers` threads. Failures are recorded, never thrown.
/// Records come back in input order.
std::vector<BenchRecord> run_bench(const std::vector<BenchInput>& inputs, const Budgets& budgets,
                                   int workers = 1, int parallel = 1);

/// Groups records by configuration, keeping first-appearance order.
std::vector<BenchRow> aggregate(const std::vector<BenchRecord>& records);

std::string bench_table_text(const std::vector<BenchRow>& rows);
std::string bench_table_csv(const std::vector<BenchRow>& rows);
std::string bench_records_csv(const std::vector<BenchRecord>& records);

}  // namespace ipctp
