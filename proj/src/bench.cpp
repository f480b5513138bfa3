#include "ipctp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "ipctp/derived.hpp"
#include "ipctp/solver.hpp"
#include "ipctp/validate.hpp"

namespace ipctp {

namespace {

RunOutcome run_once(const Instance& instance, const DerivedTables& derived, double limit, int workers) {
  RunOutcome out;
  try {
    SolveParams p;
    p.time_limit = limit;
    p.workers = workers;
    const auto result = solve(instance, derived, p);
    out.objective = result.report.best_objective;
    out.lower_bound = result.report.lower_bound;
    out.status = result.report.status;
    out.wall_time = result.report.wall_time;
    out.gap_percent = result.report.gap_percent;
    if (result.solution && !validate(instance, derived, *result.solution).empty())
      out.error = "solution failed validation";
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string opt_fixed(const std::optional<double>& v) { return v ? fixed(*v) : "-"; }

}  // namespace

double rpd(Objective short_objective, Objective long_objective) {
  if (long_objective == 0) return short_objective == 0 ? 0.0 : 100.0;
  return static_cast<double>(short_objective - long_objective) * 100.0 / static_cast<double>(long_objective);
}

std::vector<BenchRecord> run_bench(const std::vector<BenchInput>& inputs, const Budgets& budgets,
                                   int workers, int parallel) {
  std::vector<BenchRecord> records(inputs.size());
  std::atomic<std::size_t> next{0};
  const auto run = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < inputs.size();) {
      const auto& in = inputs[k];
      auto& r = records[k];
      r.config_id = in.config_id;
      r.replicate = in.replicate;
      r.name = in.name;
      try {
        const auto derived = build_derived(in.instance);
        r.short_run = run_once(in.instance, derived, budgets.short_run, workers);
        // A proof under the short budget settles the long run as well.
        if (r.short_run.status == Status::optimal || r.short_run.status == Status::infeasible)
          r.long_run = r.short_run;
        else
          r.long_run = run_once(in.instance, derived, budgets.long_run, workers);
      } catch (const std::exception& e) {
        r.short_run.error = r.long_run.error = e.what();
      }
      if (r.short_run.objective && r.long_run.objective)
        r.rpd_percent = rpd(*r.short_run.objective, *r.long_run.objective);
    }
  };
  const int threads = std::max(1, parallel);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  return records;
}

std::vector<BenchRow> aggregate(const std::vector<BenchRecord>& records) {
  std::vector<BenchRow> rows;
  std::map<std::string, std::size_t> position;
  struct Sums {
    double objective = 0, time = 0, gap = 0, rpd = 0;
    int solved = 0, timed = 0, rpd_count = 0;
  };
  std::vector<Sums> sums;
  for (const auto& r : records) {
    auto [it, fresh] = position.try_emplace(r.config_id, rows.size());
    if (fresh) {
      rows.push_back({});
      rows.back().config_id = r.config_id;
      sums.push_back({});
    }
    auto& row = rows[it->second];
    auto& s = sums[it->second];
    ++row.replicates;
    const auto& run = r.short_run;
    if (!run.error.empty()) {
      ++row.error_count;
      continue;
    }
    s.time += run.wall_time;
    ++s.timed;
    if (run.status == Status::optimal) ++row.optimal_count;
    if (!run.objective) {
      ++row.infeasible_count;
    } else {
      s.objective += static_cast<double>(*run.objective);
      s.gap += run.gap_percent.value_or(0.0);
      ++s.solved;
    }
    if (r.rpd_percent) {
      s.rpd += *r.rpd_percent;
      ++s.rpd_count;
    }
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& s = sums[k];
    auto& row = rows[k];
    if (s.timed) row.mean_wall_time = s.time / s.timed;
    if (s.solved) {
      row.mean_objective = s.objective / s.solved;
      row.gap_percent = s.gap / s.solved;
    }
    if (s.rpd_count) row.rpd_percent = s.rpd / s.rpd_count;
  }
  return rows;
}

std::string bench_table_text(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %4s %12s %10s %8s %8s %5s %5s %5s\n", "config", "n", "Obj.", "CPU",
                "GAP%", "RPD%", "opt", "inf", "err");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-16s %4d %12s %10s %8s %8s %5d %5d %5d\n", r.config_id.c_str(), r.replicates,
                  opt_fixed(r.mean_objective).c_str(), fixed(r.mean_wall_time).c_str(),
                  opt_fixed(r.gap_percent).c_str(), opt_fixed(r.rpd_percent).c_str(), r.optimal_count,
                  r.infeasible_count, r.error_count);
    out << line;
  }
  return out.str();
}

std::string bench_table_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "config,replicates,Obj.,CPU,GAP%,RPD%,optimal,infeasible,errors\n";
  const auto cell = [](const std::optional<double>& v) { return v ? fixed(*v) : std::string(); };
  for (const auto& r : rows)
    out << r.config_id << ',' << r.replicates << ',' << cell(r.mean_objective) << ',' << fixed(r.mean_wall_time, 3)
        << ',' << cell(r.gap_percent) << ',' << cell(r.rpd_percent) << ',' << r.optimal_count << ','
        << r.infeasible_count << ',' << r.error_count << '\n';
  return out.str();
}

std::string bench_records_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "config,replicate,name,short_obj,short_status,short_time,long_obj,long_status,long_time,rpd,error\n";
  const auto obj = [](const RunOutcome& r) { return r.objective ? std::to_string(*r.objective) : std::string(); };
  for (const auto& r : records) {
    std::string error = !r.short_run.error.empty() ? r.short_run.error : r.long_run.error;
    std::replace(error.begin(), error.end(), ',', ';');
    out << r.config_id << ',' << r.replicate << ',' << r.name << ',' << obj(r.short_run) << ','
        << to_string(r.short_run.status) << ',' << fixed(r.short_run.wall_time, 3) << ',' << obj(r.long_run) << ','
        << to_string(r.long_run.status) << ',' << fixed(r.long_run.wall_time, 3) << ','
        << (r.rpd_percent ? fixed(*r.rpd_percent) : std::string()) << ',' << error << '\n';
  }
  return out.str();
}

}  // namespace ipctp
