#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spreadcx/models.hpp"
#include "spreadcx/numerics.hpp"
#include "spreadcx/spread.hpp"
#include "spreadcx/workstats.hpp"

namespace spreadcx::cli {

using Json = nlohmann::json;

/// A scenario field is missing, mistyped or out of range. path() names it,
/// e.g. "series[1].initial.gamma".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A numerical failure while running one series, with enough context to reproduce it.
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { ground_sweep, quench, multiquench, floquet_vs_n, floquet_sweep, work_sweep };

std::string_view kind_name(ScenarioKind kind) noexcept;

struct SeriesSpec {
  std::string label;
  ModelParams params;        // ground state, drive base, or quench/work initial state
  ModelParams final_params;  // quench and work-sweep
  std::vector<QuenchSegment> segments;
  double delta = 0.0;
  double period = 0.0;
  int n_cycles = 0;
  SweepSide side = SweepSide::initial;
};

struct Scenario {
  std::string name;
  std::string description;
  ScenarioKind kind = ScenarioKind::ground_sweep;
  ModelKind model = ModelKind::three_spin;
  int grid_intervals = MomentumGrid::kDefaultIntervals;
  std::string output;
  std::string axis_name;
  AxisRange axis;
  double time_end = 0.0;
  int time_samples = 500;
  int n_from = 0;
  int n_to = 0;
  int steps_per_period = 256;
  std::vector<SeriesSpec> series;
  Json source;
};

/// Validates a scenario document against the schema in README.md.
Scenario parse_scenario(const Json& doc);
Scenario load_scenario(const std::filesystem::path& file);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // one vector per column

  std::size_t rows() const noexcept { return data.empty() ? 0 : data.front().size(); }
};

Table run_scenario(const Scenario& scenario);

/// Header comments, column line and rows with 17 significant digits.
/// The "# generated:" line is the only line that varies between runs.
void write_csv(std::ostream& out, const Scenario& scenario, const Table& table,
               const std::string& timestamp);

struct RunReport {
  std::filesystem::path csv;
  std::filesystem::path manifest;
  std::size_t rows = 0;
  double seconds = 0.0;
};

/// Runs the scenario and writes `csv` plus a sibling .manifest.json. Nothing
/// is written when parsing or computation fails.
RunReport run_to_files(const Scenario& scenario, const std::filesystem::path& csv);

std::string format_double(double v);

}  // namespace spreadcx::cli
