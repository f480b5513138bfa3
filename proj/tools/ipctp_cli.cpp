// ipctp: command line front end for the terminal scheduling toolkit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ipctp/bench.hpp"
#include "ipctp/derived.hpp"
#include "ipctp/error.hpp"
#include "ipctp/gantt.hpp"
#include "ipctp/generator.hpp"
#include "ipctp/mip_export.hpp"
#include "ipctp/oracle.hpp"
#include "ipctp/solver.hpp"
#include "ipctp/validate.hpp"

namespace fs = std::filesystem;
using namespace ipctp;

namespace {

int default_workers() {
  if (const char* env = std::getenv("IPCTP_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string() + ": cannot write file");
  out << text;
}

fs::path output_path(const std::string& explicit_path, const std::string& out_dir, const std::string& input,
                     const std::string& suffix) {
  if (!explicit_path.empty()) return explicit_path;
  fs::path in(input);
  fs::path dir = out_dir.empty() ? in.parent_path() : fs::path(out_dir);
  return dir / (in.stem().string() + suffix);
}

/// Config id of a corpus file name: ipctp_u2_b4_s5_r20_3.json -> u2_b4_s5_r20.
std::pair<std::string, int> config_of(const fs::path& file) {
  std::string stem = file.stem().string();
  if (stem.rfind("ipctp_", 0) == 0) stem = stem.substr(6);
  const auto cut = stem.rfind('_');
  if (cut != std::string::npos) {
    const std::string tail = stem.substr(cut + 1);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
      return {stem.substr(0, cut), std::stoi(tail)};
  }
  return {stem, 0};
}

void report_error(const std::string& kind, const std::string& message) {
  nlohmann::json doc = {{"error", kind}, {"message", message}};
  std::cerr << doc.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrated quay crane, yard location and yard crane scheduling"};
  app.require_subcommand(1);
  const int env_workers = default_workers();

  // generate
  GenConfig gen;
  std::string gen_out_dir = ".";
  bool gen_grid = false;
  int gen_replicates = 1;
  auto* generate_cmd = app.add_subcommand("generate", "Generate instances");
  generate_cmd->add_option("--seed", gen.seed, "Seed (base seed with --grid)");
  generate_cmd->add_option("--shipments", gen.shipments)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--bays", gen.bays);
  generate_cmd->add_option("--inbound-ratio", gen.inbound_ratio);
  generate_cmd->add_option("--ul-ratio", gen.ul_ratio);
  generate_cmd->add_option("--vessels", gen.vessels);
  generate_cmd->add_option("--replicates", gen_replicates, "Instances of the configuration")->check(CLI::PositiveNumber);
  generate_cmd->add_flag("--grid", gen_grid, "Generate the full 300-instance grid");
  generate_cmd->add_option("--out-dir", gen_out_dir);

  // solve
  std::string solve_in, solve_out, solve_report, solve_gantt, solve_out_dir;
  SolveParams solve_params;
  solve_params.workers = env_workers;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance with branch and bound");
  solve_cmd->add_option("instance", solve_in)->required();
  solve_cmd->add_option("--time-limit", solve_params.time_limit, "Seconds");
  solve_cmd->add_option("--workers", solve_params.workers)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve_params.seed);
  solve_cmd->add_option("-o,--out", solve_out, "Solution file");
  solve_cmd->add_option("--report", solve_report, "Report file");
  solve_cmd->add_option("--out-dir", solve_out_dir);
  solve_cmd->add_option("--gantt", solve_gantt, "Write an SVG Gantt chart");

  // validate
  std::string val_in, val_sol;
  auto* validate_cmd = app.add_subcommand("validate", "Check a solution against every constraint");
  validate_cmd->add_option("instance", val_in)->required();
  validate_cmd->add_option("solution", val_sol)->required();

  // oracle
  std::string or_in, or_out, or_out_dir;
  OracleOptions or_opts;
  or_opts.workers = env_workers;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive enumeration for small instances");
  oracle_cmd->add_option("instance", or_in)->required();
  oracle_cmd->add_option("--limit", or_opts.limit, "Combination budget");
  oracle_cmd->add_option("--workers", or_opts.workers)->check(CLI::PositiveNumber);
  oracle_cmd->add_option("-o,--out", or_out);
  oracle_cmd->add_option("--out-dir", or_out_dir);

  // export-mip
  std::string mip_in, mip_out, mip_map, mip_out_dir;
  std::vector<std::string> mip_disabled;
  std::int64_t big_m = 0;
  auto* export_cmd = app.add_subcommand("export-mip", "Write the MIP model in LP format");
  export_cmd->add_option("instance", mip_in)->required();
  export_cmd->add_option("--big-m", big_m)->check(CLI::PositiveNumber);
  export_cmd->add_option("-o,--out", mip_out);
  export_cmd->add_option("--mapping", mip_map);
  export_cmd->add_option("--out-dir", mip_out_dir);
  export_cmd->add_option("--disable", mip_disabled, "Constraint families to leave out")->delimiter(',');

  // import-mip
  std::string imp_in, imp_values, imp_out;
  auto* import_cmd = app.add_subcommand("import-mip", "Rebuild and validate a solution from MIP values");
  import_cmd->add_option("instance", imp_in)->required();
  import_cmd->add_option("values", imp_values, "Lines of '<variable> <value>'")->required();
  import_cmd->add_option("--big-m", big_m)->check(CLI::PositiveNumber);
  import_cmd->add_option("-o,--out", imp_out);

  // bench
  std::vector<std::string> bench_inputs;
  std::string bench_budgets = "600,3600", bench_out_dir;
  int bench_workers = env_workers, bench_parallel = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a corpus under two budgets and tabulate");
  bench_cmd->add_option("inputs", bench_inputs, "Instance files or directories")->required();
  bench_cmd->add_option("--budgets", bench_budgets, "short,long seconds");
  bench_cmd->add_option("--workers", bench_workers)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--parallel", bench_parallel, "Instances solved concurrently")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out-dir", bench_out_dir, "Write table.csv, table.txt and runs.csv");

  // gantt
  std::string gantt_in, gantt_sol, gantt_svg_out;
  int gantt_width = 80;
  auto* gantt_cmd = app.add_subcommand("gantt", "Draw a solution");
  gantt_cmd->add_option("instance", gantt_in)->required();
  gantt_cmd->add_option("solution", gantt_sol)->required();
  gantt_cmd->add_option("--width", gantt_width);
  gantt_cmd->add_option("--svg", gantt_svg_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what());
    return 64;
  }

  try {
    if (*generate_cmd) {
      std::vector<CorpusEntry> corpus;
      const std::uint64_t base = gen.seed;
      if (gen_grid) {
        corpus = generate_grid(base, gen.instances_per_config, gen.vessels);
      } else {
        for (int rep = 0; rep < gen_replicates; ++rep) {
          GenConfig c = gen;
          c.instances_per_config = gen_replicates;
          c.seed = gen_replicates == 1 ? base : derive_seed(base, gen, rep);
          corpus.push_back({c, rep, corpus_file_name(c, rep), generate(c)});
        }
      }
      const fs::path dir(gen_out_dir);
      for (const auto& e : corpus) write_text(dir / e.file_name, instance_to_json(e.instance));
      write_text(dir / "manifest.json", manifest_to_json(corpus, base));
      std::cout << corpus.size() << " instance(s) written to " << dir.string() << "\n";
      return 0;
    }

    if (*solve_cmd) {
      const Instance instance = load_instance(solve_in);
      const DerivedTables derived = build_derived(instance);
      const SolveResult result = solve(instance, derived, solve_params);
      const auto sol_path = output_path(solve_out, solve_out_dir, solve_in, ".solution.json");
      const auto rep_path = output_path(solve_report, solve_out_dir, solve_in, ".report.json");
      write_text(rep_path, report_to_json(result.report));
      const auto& r = result.report;
      if (result.solution) {
        const auto violations = validate(instance, derived, *result.solution);
        if (!violations.empty()) {
          std::cout << violations_to_json(violations);
          throw std::logic_error("solver output failed validation");
        }
        write_text(sol_path, solution_to_json(*result.solution));
        if (!solve_gantt.empty()) write_text(solve_gantt, gantt_svg(instance, *result.solution));
      }
      std::cout << "status " << to_string(r.status) << " objective "
                << (r.best_objective ? std::to_string(*r.best_objective) : "none") << " bound " << r.lower_bound
                << " nodes " << r.nodes << " time " << r.wall_time << "s\n";
      return r.status == Status::infeasible ? 3 : 0;
    }

    if (*validate_cmd) {
      const Instance instance = load_instance(val_in);
      const DerivedTables derived = build_derived(instance);
      const auto violations = validate(instance, derived, load_solution(val_sol));
      std::cout << violations_to_json(violations);
      return violations.empty() ? 0 : 1;
    }

    if (*oracle_cmd) {
      const Instance instance = load_instance(or_in);
      const DerivedTables derived = build_derived(instance);
      const OracleResult result = brute_force(instance, derived, or_opts);
      write_text(output_path(or_out, or_out_dir, or_in, ".oracle.json"), solution_to_json(result.best_solution));
      std::cout << "optimum " << result.best_objective << " combinations " << result.enumerated << "\n";
      return 0;
    }

    if (*export_cmd) {
      const Instance instance = load_instance(mip_in);
      const DerivedTables derived = build_derived(instance);
      MipOptions opts;
      if (big_m > 0) opts.big_m = big_m;
      opts.disabled_families.insert(mip_disabled.begin(), mip_disabled.end());
      const MipModel model = build_mip(instance, derived, opts);
      const auto lp_path = output_path(mip_out, mip_out_dir, mip_in, ".lp");
      const auto map_path = output_path(mip_map, mip_out_dir, mip_in, ".mapping.json");
      write_text(lp_path, mip_to_lp(model));
      write_text(map_path, mip_mapping_json(model));
      std::cout << model.variables.size() << " variables, " << model.rows.size() << " rows, big-M " << model.big_m
                << "\n";
      return 0;
    }

    if (*import_cmd) {
      const Instance instance = load_instance(imp_in);
      const DerivedTables derived = build_derived(instance);
      MipOptions opts;
      if (big_m > 0) opts.big_m = big_m;
      const MipModel model = build_mip(instance, derived, opts);
      const Solution sol = solution_from_mip_values(instance, derived, model, parse_mip_values(read_text(imp_values)));
      const auto violations = validate(instance, derived, sol);
      if (!violations.empty()) {
        std::cout << violations_to_json(violations);
        return 1;
      }
      if (!imp_out.empty()) write_text(imp_out, solution_to_json(sol));
      std::cout << "objective " << sol.objective << "\n";
      return 0;
    }

    if (*bench_cmd) {
      Budgets budgets;
      const auto comma = bench_budgets.find(',');
      try {
        if (comma == std::string::npos) throw std::invalid_argument(bench_budgets);
        budgets.short_run = std::stod(bench_budgets.substr(0, comma));
        budgets.long_run = std::stod(bench_budgets.substr(comma + 1));
      } catch (const std::exception&) {
        throw ConfigInvalid("--budgets expects 'short,long' in seconds");
      }
      if (!(budgets.short_run > 0 && budgets.long_run > 0)) throw ConfigInvalid("budgets must be positive");

      std::vector<fs::path> files;
      for (const auto& in : bench_inputs) {
        if (fs::is_directory(in)) {
          for (const auto& e : fs::directory_iterator(in))
            if (e.path().extension() == ".json" && e.path().filename() != "manifest.json" &&
                e.path().filename().string().rfind("ipctp_", 0) == 0)
              files.push_back(e.path());
        } else {
          files.push_back(in);
        }
      }
      std::vector<BenchInput> inputs;
      for (const auto& f : files) {
        auto [config, rep] = config_of(f);
        inputs.push_back({config, rep, f.filename().string(), load_instance(f.string())});
      }
      std::stable_sort(inputs.begin(), inputs.end(), [](const BenchInput& a, const BenchInput& b) {
        return std::tie(a.config_id, a.replicate) < std::tie(b.config_id, b.replicate);
      });
      const auto records = run_bench(inputs, budgets, bench_workers, bench_parallel);
      const auto rows = aggregate(records);
      std::cout << bench_table_text(rows);
      if (!bench_out_dir.empty()) {
        const fs::path dir(bench_out_dir);
        write_text(dir / "table.txt", bench_table_text(rows));
        write_text(dir / "table.csv", bench_table_csv(rows));
        write_text(dir / "runs.csv", bench_records_csv(records));
      }
      return 0;
    }

    if (*gantt_cmd) {
      const Instance instance = load_instance(gantt_in);
      const Solution sol = load_solution(gantt_sol);
      std::cout << gantt_text(instance, sol, gantt_width);
      if (!gantt_svg_out.empty()) write_text(gantt_svg_out, gantt_svg(instance, sol));
      return 0;
    }
  } catch (const Error& e) {
    report_error(e.kind(), e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return 70;
  }
  return 0;
}
