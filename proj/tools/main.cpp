// spreadcx: batch runs of spread-complexity scenarios.
//
//   spreadcx run <scenario.json> [--out file.csv] [--grid n] [--threads n]
//   spreadcx preset <name> [--out-dir dir] [--grid n] [--threads n] [--print]
//   spreadcx list-presets
//
// SPREADCX_THREADS sets the worker count when --threads is absent.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "presets.hpp"
#include "scenario.hpp"
#include "spreadcx/errors.hpp"

namespace {

using namespace spreadcx::cli;

struct CommonOptions {
  int grid = 0;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--grid", opts.grid, "Simpson intervals on [0, pi] (even), overrides the scenario")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", opts.threads, "worker threads (default: SPREADCX_THREADS or all cores)");
}

void apply_common(Scenario& sc, const CommonOptions& opts) {
  if (opts.grid != 0) {
    if (opts.grid % 2 != 0) throw SchemaError("--grid", "must be even");
    sc.grid_intervals = opts.grid;
  }
}

std::filesystem::path default_output(const Scenario& sc, const std::filesystem::path& dir) {
  return dir / (sc.name + ".csv");
}

void report(const RunReport& r) {
  std::cout << "wrote " << r.csv.string() << " (" << r.rows << " rows, " << r.seconds << " s), manifest "
            << r.manifest.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spreadcx: spread complexity, quench, Floquet and work-statistics scenarios"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SPREADCX_VERSION));

  CommonOptions run_opts;
  std::string scenario_file;
  std::string out_file;
  auto* run = app.add_subcommand("run", "run a scenario file and write CSV plus manifest");
  run->add_option("scenario", scenario_file, "scenario JSON file")->required();
  run->add_option("--out", out_file, "CSV output path (default: scenario 'output' or <name>.csv)");
  add_common(run, run_opts);

  CommonOptions preset_opts;
  std::string preset_name;
  std::string out_dir = ".";
  bool print_only = false;
  auto* preset = app.add_subcommand("preset", "run a named figure preset");
  preset->add_option("name", preset_name, "preset name (see list-presets)")->required();
  preset->add_option("--out-dir", out_dir, "directory for the CSV files");
  preset->add_flag("--print", print_only, "print the preset's scenario JSON instead of running it");
  add_common(preset, preset_opts);

  auto* list = app.add_subcommand("list-presets", "list named presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& p : presets()) std::cout << p.name << "  " << p.description << "\n";
      return EXIT_SUCCESS;
    }
    if (*run) {
      if (run_opts.threads) spreadcx::set_thread_count(run_opts.threads);
      Scenario sc = load_scenario(scenario_file);
      apply_common(sc, run_opts);
      std::filesystem::path out = !out_file.empty()     ? std::filesystem::path(out_file)
                                  : !sc.output.empty() ? std::filesystem::path(sc.output)
                                                       : default_output(sc, ".");
      report(run_to_files(sc, out));
      return EXIT_SUCCESS;
    }
    if (*preset) {
      const Preset& p = find_preset(preset_name);
      if (print_only) {
        for (const auto& s : p.scenarios) std::cout << s.dump(2) << "\n";
        return EXIT_SUCCESS;
      }
      if (preset_opts.threads) spreadcx::set_thread_count(preset_opts.threads);
      std::vector<Scenario> parsed;
      for (const auto& s : p.scenarios) {
        parsed.push_back(parse_scenario(s));
        apply_common(parsed.back(), preset_opts);
      }
      for (const auto& sc : parsed) report(run_to_files(sc, default_output(sc, out_dir)));
      return EXIT_SUCCESS;
    }
  } catch (const SchemaError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const RunError& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return EXIT_SUCCESS;
}
