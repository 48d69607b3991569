#include "scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "spreadcx/errors.hpp"
#include "spreadcx/floquet.hpp"

namespace spreadcx::cli {

namespace {

// A JSON object plus its path in the document; rejects keys it was not asked about.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  bool has(const std::string& key) const { return j_.contains(key); }

  const Json& raw(const std::string& key) const {
    seen_.insert(key);
    if (!j_.contains(key)) throw SchemaError(at(key), "required field is missing");
    return j_.at(key);
  }

  double number(const std::string& key) const {
    const Json& v = raw(key);
    if (!v.is_number()) throw SchemaError(at(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(at(key), "must be finite");
    return d;
  }
  double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : (seen_.insert(key), fallback);
  }

  int integer(const std::string& key) const {
    const Json& v = raw(key);
    if (!v.is_number_integer()) throw SchemaError(at(key), "expected an integer");
    return v.get<int>();
  }
  int integer(const std::string& key, int fallback) const {
    return has(key) ? integer(key) : (seen_.insert(key), fallback);
  }

  std::string text(const std::string& key) const {
    const Json& v = raw(key);
    if (!v.is_string()) throw SchemaError(at(key), "expected a string");
    return v.get<std::string>();
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : (seen_.insert(key), fallback);
  }

  Node object(const std::string& key) const { return Node(raw(key), at(key)); }

  const Json& array(const std::string& key) const {
    const Json& v = raw(key);
    if (!v.is_array() || v.empty()) throw SchemaError(at(key), "expected a non-empty array");
    return v;
  }

  void reject_unknown() const {
    for (const auto& [key, value] : j_.items())
      if (!seen_.count(key)) throw SchemaError(at(key), "unknown field");
  }

 private:
  const Json& j_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

ScenarioKind parse_kind(const Node& n) {
  const std::string k = n.text("kind");
  if (k == "ground-sweep") return ScenarioKind::ground_sweep;
  if (k == "quench") return ScenarioKind::quench;
  if (k == "multiquench") return ScenarioKind::multiquench;
  if (k == "floquet-vs-n") return ScenarioKind::floquet_vs_n;
  if (k == "floquet-sweep") return ScenarioKind::floquet_sweep;
  if (k == "work-sweep") return ScenarioKind::work_sweep;
  throw SchemaError(n.at("kind"), "unknown kind '" + k +
                                      "' (expected ground-sweep, quench, multiquench, "
                                      "floquet-vs-n, floquet-sweep or work-sweep)");
}

ModelParams parse_params(const Node& n, ModelKind model) {
  ModelParams p = default_params(model);
  for (auto name : parameter_names(model)) p = with_parameter(p, name, n.number(std::string(name)));
  n.reject_unknown();
  try {
    validate(p);
  } catch (const DomainError& e) {
    throw SchemaError(n.at(std::string(parameter_names(model).front())), e.what());
  }
  return p;
}

AxisRange parse_axis(const Node& n, ModelKind model, std::string& name) {
  name = n.text("name");
  const auto names = parameter_names(model);
  bool known = false;
  for (auto p : names) known = known || p == name;
  if (!known) {
    std::string expected;
    for (auto p : names) expected += (expected.empty() ? "" : ", ") + std::string(p);
    throw SchemaError(n.at("name"), "model " + std::string(model_name(model)) +
                                        " has no parameter '" + name + "' (expected " + expected + ")");
  }
  AxisRange r{n.number("from"), n.number("to"), n.number("step")};
  if (!(r.step > 0.0)) throw SchemaError(n.at("step"), "must be > 0");
  if (!(r.to > r.from)) throw SchemaError(n.at("to"), "must exceed 'from'");
  if ((r.to - r.from) / r.step < 2.0) throw SchemaError(n.at("step"), "axis needs at least 3 points");
  if ((r.to - r.from) / r.step > 1e6) throw SchemaError(n.at("step"), "axis has more than 1e6 points");
  n.reject_unknown();
  return r;
}

void parse_drive(const Node& n, SeriesSpec& s, bool needs_cycles) {
  s.delta = n.number("delta");
  s.period = n.number("period");
  if (!(s.delta >= 0.0)) throw SchemaError(n.at("delta"), "must be >= 0");
  if (!(s.period > 0.0)) throw SchemaError(n.at("period"), "must be > 0");
  if (needs_cycles) {
    s.n_cycles = n.integer("n");
    if (s.n_cycles < 0) throw SchemaError(n.at("n"), "must be >= 0");
  }
  n.reject_unknown();
}

SeriesSpec parse_series(const Node& n, const Scenario& sc) {
  SeriesSpec s;
  s.label = n.text("label", "c");
  for (char c : s.label)
    if (c == ',' || c == '\n' || c == '"') throw SchemaError(n.at("label"), "must not contain ',', '\"' or newlines");
  switch (sc.kind) {
    case ScenarioKind::ground_sweep:
      s.params = parse_params(n.object("params"), sc.model);
      break;
    case ScenarioKind::quench:
      s.params = parse_params(n.object("initial"), sc.model);
      s.final_params = parse_params(n.object("final"), sc.model);
      break;
    case ScenarioKind::multiquench: {
      s.params = parse_params(n.object("initial"), sc.model);
      const Json& segs = n.array("segments");
      for (std::size_t i = 0; i < segs.size(); ++i) {
        Node seg(segs[i], index_path(n.at("segments"), i));
        QuenchSegment q{parse_params(seg.object("params"), sc.model), seg.number("duration")};
        if (!(q.duration > 0.0)) throw SchemaError(seg.at("duration"), "must be > 0");
        seg.reject_unknown();
        s.segments.push_back(q);
      }
      break;
    }
    case ScenarioKind::floquet_vs_n:
    case ScenarioKind::floquet_sweep: {
      s.params = parse_params(n.object("params"), sc.model);
      parse_drive(n.object("drive"), s, sc.kind == ScenarioKind::floquet_sweep);
      break;
    }
    case ScenarioKind::work_sweep: {
      s.params = parse_params(n.object("initial"), sc.model);
      s.final_params = parse_params(n.object("final"), sc.model);
      const std::string side = n.text("side", "initial");
      if (side == "initial") s.side = SweepSide::initial;
      else if (side == "final") s.side = SweepSide::final;
      else throw SchemaError(n.at("side"), "expected 'initial' or 'final'");
      break;
    }
  }
  n.reject_unknown();
  return s;
}

// Drive validity over the whole swept axis (SSH hoppings must stay >= 0).
void check_drive(const Scenario& sc, const SeriesSpec& s, const std::string& path) {
  auto check = [&](const ModelParams& base) {
    try {
      DriveSpec{base, s.delta, s.period, s.n_cycles}.validate();
    } catch (const DomainError& e) {
      throw SchemaError(path + ".drive", e.what());
    }
  };
  if (sc.kind == ScenarioKind::floquet_sweep) {
    for (double x : {sc.axis.from, sc.axis.to}) check(with_parameter(s.params, sc.axis_name, x));
  } else {
    check(s.params);
  }
}

}  // namespace

std::string_view kind_name(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::ground_sweep: return "ground-sweep";
    case ScenarioKind::quench: return "quench";
    case ScenarioKind::multiquench: return "multiquench";
    case ScenarioKind::floquet_vs_n: return "floquet-vs-n";
    case ScenarioKind::floquet_sweep: return "floquet-sweep";
    case ScenarioKind::work_sweep: return "work-sweep";
  }
  return "unknown";
}

Scenario parse_scenario(const Json& doc) {
  Node root(doc, "");
  Scenario sc;
  sc.source = doc;
  sc.name = root.text("name");
  if (sc.name.empty()) throw SchemaError("name", "must not be empty");
  sc.description = root.text("description", "");
  sc.kind = parse_kind(root);
  try {
    sc.model = parse_model_kind(root.text("model"));
  } catch (const DomainError& e) {
    throw SchemaError("model", e.what());
  }
  sc.grid_intervals = root.integer("grid", MomentumGrid::kDefaultIntervals);
  if (sc.grid_intervals < 2 || sc.grid_intervals % 2 != 0)
    throw SchemaError("grid", "number of Simpson intervals must be even and >= 2");
  sc.output = root.text("output", "");

  switch (sc.kind) {
    case ScenarioKind::ground_sweep:
    case ScenarioKind::floquet_sweep:
    case ScenarioKind::work_sweep:
      sc.axis = parse_axis(root.object("axis"), sc.model, sc.axis_name);
      break;
    case ScenarioKind::quench:
    case ScenarioKind::multiquench: {
      Node t = root.object("time");
      sc.time_samples = t.integer("samples", 500);
      if (sc.time_samples < 2) throw SchemaError(t.at("samples"), "must be >= 2");
      if (sc.kind == ScenarioKind::quench || t.has("end")) {
        sc.time_end = t.number("end");
        if (!(sc.time_end > 0.0)) throw SchemaError(t.at("end"), "must be > 0");
      }
      t.reject_unknown();
      break;
    }
    case ScenarioKind::floquet_vs_n: {
      Node c = root.object("cycles");
      sc.n_from = c.integer("from", 0);
      sc.n_to = c.integer("to");
      if (sc.n_from < 0) throw SchemaError(c.at("from"), "must be >= 0");
      if (sc.n_to <= sc.n_from) throw SchemaError(c.at("to"), "must exceed 'from'");
      c.reject_unknown();
      break;
    }
  }
  if (sc.kind == ScenarioKind::floquet_vs_n || sc.kind == ScenarioKind::floquet_sweep) {
    sc.steps_per_period = root.integer("steps_per_period", kDefaultStepsPerPeriod);
    if (sc.steps_per_period < 64 || sc.steps_per_period % 2 != 0)
      throw SchemaError("steps_per_period", "must be even and >= 64");
  }

  const Json& series = root.array("series");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string path = index_path("series", i);
    SeriesSpec s = parse_series(Node(series[i], path), sc);
    if (!labels.insert(s.label).second) throw SchemaError(path + ".label", "duplicate label '" + s.label + "'");
    if (sc.kind == ScenarioKind::floquet_vs_n || sc.kind == ScenarioKind::floquet_sweep)
      check_drive(sc, s, path);
    if (sc.kind == ScenarioKind::multiquench) {
      double total = 0.0;
      for (const auto& q : s.segments) total += q.duration;
      if (sc.time_end == 0.0) sc.time_end = total;
      if (sc.time_end > total * (1.0 + 1e-12))
        throw SchemaError(path + ".segments", "schedule ends before time.end");
    }
    sc.series.push_back(std::move(s));
  }
  root.reject_unknown();
  return sc;
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open scenario file " + file.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("<root>", std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

namespace {

std::string describe(const ModelParams& p) {
  std::string out;
  for (auto name : parameter_names(kind_of(p)))
    out += (out.empty() ? "" : ", ") + std::string(name) + "=" + format_double(get_parameter(p, name));
  return out;
}

template <class F>
auto with_context(const Scenario& sc, const SeriesSpec& s, F&& body) {
  try {
    return body();
  } catch (const NumericalError& e) {
    std::string params = "initial/base {" + describe(s.params) + "}";
    if (sc.kind == ScenarioKind::quench || sc.kind == ScenarioKind::work_sweep)
      params += ", final {" + describe(s.final_params) + "}";
    throw RunError("numerical failure in model " + std::string(model_name(sc.model)) + ", series '" +
                   s.label + "', k=" + format_double(e.k()) + " (node " + std::to_string(e.node()) +
                   "), " + params + ": " + e.what());
  } catch (const DomainError& e) {
    throw RunError("series '" + s.label + "': " + e.what());
  }
}

}  // namespace

Table run_scenario(const Scenario& sc) {
  const MomentumGrid grid(sc.grid_intervals);
  Table t;
  std::vector<std::vector<double>> values, derivs;
  std::vector<std::string> value_names, deriv_names;

  switch (sc.kind) {
    case ScenarioKind::ground_sweep:
      t.columns.push_back(sc.axis_name);
      for (const auto& s : sc.series) {
        auto r = with_context(sc, s, [&] {
          return complexity_derivative_sweep(s.params, sc.axis_name, sc.axis, grid);
        });
        if (t.data.empty()) t.data.push_back(r.axis);
        value_names.push_back("complexity_" + s.label);
        deriv_names.push_back("dcomplexity_d" + sc.axis_name + "_" + s.label);
        values.push_back(std::move(r.value));
        derivs.push_back(std::move(r.derivative));
      }
      break;
    case ScenarioKind::quench:
    case ScenarioKind::multiquench: {
      const auto times = uniform_times(sc.time_end, static_cast<std::size_t>(sc.time_samples));
      t.columns.push_back("time");
      t.data.push_back(times);
      for (const auto& s : sc.series) {
        const QuenchSchedule schedule =
            sc.kind == ScenarioKind::quench
                ? QuenchSchedule::single(s.params, s.final_params, sc.time_end)
                : QuenchSchedule{s.params, s.segments};
        auto curve = with_context(sc, s, [&] { return quench_complexity(schedule, times, grid); });
        value_names.push_back("complexity_" + s.label);
        values.push_back(std::move(curve.complexity));
      }
      break;
    }
    case ScenarioKind::floquet_vs_n: {
      std::vector<int> ns;
      for (int n = sc.n_from; n <= sc.n_to; ++n) ns.push_back(n);
      t.columns.push_back("n");
      t.data.emplace_back(ns.begin(), ns.end());
      for (const auto& s : sc.series) {
        const DriveSpec d{s.params, s.delta, s.period, 0};
        value_names.push_back("complexity_" + s.label);
        values.push_back(with_context(
            sc, s, [&] { return floquet_complexity_vs_n(d, ns, grid, sc.steps_per_period); }));
      }
      break;
    }
    case ScenarioKind::floquet_sweep:
      t.columns.push_back(sc.axis_name);
      for (const auto& s : sc.series) {
        const DriveSpec d{s.params, s.delta, s.period, s.n_cycles};
        auto r = with_context(sc, s, [&] {
          return floquet_sweep(d, sc.axis_name, sc.axis, grid, sc.steps_per_period);
        });
        if (t.data.empty()) t.data.push_back(r.axis);
        value_names.push_back("complexity_" + s.label);
        deriv_names.push_back("dcomplexity_d" + sc.axis_name + "_" + s.label);
        values.push_back(std::move(r.value));
        derivs.push_back(std::move(r.derivative));
      }
      break;
    case ScenarioKind::work_sweep:
      t.columns.push_back(sc.axis_name);
      for (const auto& s : sc.series) {
        auto r = with_context(sc, s, [&] {
          return work_stats_derivative_sweep(s.params, s.final_params, sc.axis_name, sc.axis,
                                             s.side, grid);
        });
        if (t.data.empty()) t.data.push_back(r.mean.axis);
        value_names.push_back("work_mean_" + s.label);
        value_names.push_back("work_variance_" + s.label);
        deriv_names.push_back("dwork_mean_d" + sc.axis_name + "_" + s.label);
        deriv_names.push_back("dwork_variance_d" + sc.axis_name + "_" + s.label);
        values.push_back(std::move(r.mean.value));
        values.push_back(std::move(r.variance.value));
        derivs.push_back(std::move(r.mean.derivative));
        derivs.push_back(std::move(r.variance.derivative));
      }
      break;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    t.columns.push_back(value_names[i]);
    t.data.push_back(std::move(values[i]));
  }
  for (std::size_t i = 0; i < derivs.size(); ++i) {
    t.columns.push_back(deriv_names[i]);
    t.data.push_back(std::move(derivs[i]));
  }
  return t;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Scenario& sc, const Table& table, const std::string& timestamp) {
  out << "# spreadcx " << SPREADCX_VERSION << "\n";
  out << "# scenario: " << sc.name << "\n";
  if (!sc.description.empty()) out << "# description: " << sc.description << "\n";
  out << "# kind: " << kind_name(sc.kind) << "\n";
  out << "# model: " << model_name(sc.model) << "\n";
  out << "# grid: " << sc.grid_intervals << " Simpson intervals on [0, pi]\n";
  out << "# scenario-json: " << sc.source.dump() << "\n";
  out << "# generated: " << timestamp << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << "\n";
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.data.size(); ++c) out << (c ? "," : "") << format_double(table.data[c][r]);
    out << "\n";
  }
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunReport run_to_files(const Scenario& sc, const std::filesystem::path& csv) {
  const auto start = std::chrono::steady_clock::now();
  const Table table = run_scenario(sc);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string stamp = utc_timestamp();

  std::ostringstream body;
  write_csv(body, sc, table, stamp);

  RunReport report;
  report.csv = csv;
  report.manifest = csv;
  report.manifest.replace_extension(".manifest.json");
  report.rows = table.rows();
  report.seconds = seconds;

  if (csv.has_parent_path()) std::filesystem::create_directories(csv.parent_path());
  {
    std::ofstream f(csv, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + csv.string());
    f << body.str();
  }
  Json manifest = {
      {"tool", "spreadcx"},
      {"version", SPREADCX_VERSION},
      {"generated", stamp},
      {"scenario", sc.source},
      {"grid_intervals", sc.grid_intervals},
      {"threads", thread_count()},
      {"csv", csv.filename().string()},
      {"columns", table.columns},
      {"rows", table.rows()},
      {"elapsed_seconds", seconds},
  };
  std::ofstream m(report.manifest, std::ios::binary);
  if (!m) throw std::runtime_error("cannot write " + report.manifest.string());
  m << manifest.dump(2) << "\n";
  return report;
}

}  // namespace spreadcx::cli
