#include "modesplit/scenarios.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include "modesplit/background.hpp"
#include "modesplit/csv.hpp"
#include "modesplit/dispersion.hpp"
#include "modesplit/energetics.hpp"
#include "modesplit/error.hpp"
#include "modesplit/evolve.hpp"
#include "modesplit/modal_relations.hpp"
#include "modesplit/numerics.hpp"
#include "modesplit/svg.hpp"

namespace modesplit::scenarios {

namespace {

using csv::format_double;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  const std::string t = trim(value);
  const char* first = t.data();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw InvalidInput("config key '" + key + "': not a finite number: '" + value + "'");
  }
  return v;
}

std::size_t to_size(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw InvalidInput("config key '" + key + "': not a non-negative integer: '" + value + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw InvalidInput("config key '" + key + "': not a boolean: '" + value + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::istringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  if (out.empty()) throw InvalidInput("config key '" + key + "': empty list");
  return out;
}

std::string kind_name(PulseKind k) {
  return k == PulseKind::gaussian ? "gaussian" : "derivative";
}

std::string alpha_tag(double alpha) { return "alphaH0=" + format_double(alpha); }

std::vector<PulseKind> kinds_of(const ScenarioConfig& cfg) {
  if (cfg.kind) return {*cfg.kind};
  return {PulseKind::gaussian, PulseKind::gaussian_derivative};
}

AtmosphereParams params_for(const ScenarioConfig& cfg, double alpha) {
  AtmosphereParams p;
  p.gamma = cfg.gamma;
  p.alphaH0 = alpha;
  p.h = cfg.h;
  return p;
}

// The stability gate runs on the parameters first so an unstable request is
// reported with its nu even when the profile could not be built.
BackgroundProfile gated_profile(const ScenarioConfig& cfg, double alpha, std::size_t n) {
  const AtmosphereParams p = params_for(cfg, alpha);
  require_stable(check_stability(p));
  return build_profile(p, n);
}

PulseSpec pulse_of(const ScenarioConfig& cfg, PulseKind kind) {
  return PulseSpec{kind, cfg.amplitude, cfg.beta, cfg.z0};
}

DecomposeOptions options_of(const ScenarioConfig& cfg) {
  DecomposeOptions o;
  o.method = cfg.method;
  return o;
}

std::string render_table(const csv::Table& table, const csv::Preamble& preamble) {
  std::ostringstream os;
  csv::write_table(os, table, preamble);
  return os.str();
}

std::string render_metrics(const std::vector<Metric>& metrics, const csv::Preamble& preamble) {
  std::ostringstream os;
  for (const std::string& line : preamble) os << "# " << line << '\n';
  os << "metric,kind,alphaH0,value\n";
  for (const Metric& m : metrics) {
    os << m.name << ',' << m.kind << ',' << format_double(m.alphaH0) << ','
       << format_double(m.value) << '\n';
  }
  return os.str();
}

double state_difference(const FieldState& a, const FieldState& b) {
  FieldState d = a;
  for (std::size_t i = 0; i < d.Uz.size(); ++i) {
    d.Uz[i] -= b.Uz[i];
    d.P[i] -= b.P[i];
    d.Phi[i] -= b.Phi[i];
  }
  const double ref = l2_norm(b);
  return ref > 0.0 ? l2_norm(d) / ref : l2_norm(d);
}

struct Curve {
  std::string name;
  Field values;
};

// Appends one curve pair per alpha for a figure panel and the optional SVGs.
void emit_panel(ScenarioOutput& out, const ScenarioConfig& cfg, const std::string& stem,
                const std::string& title, const Grid1D& grid,
                const std::vector<std::pair<double, std::vector<Curve>>>& per_alpha,
                const csv::Preamble& preamble) {
  csv::Table table;
  table.header.push_back("z");
  table.columns.push_back(grid.positions());
  for (const auto& [alpha, curves] : per_alpha) {
    for (const Curve& c : curves) {
      table.header.push_back(c.name + "_" + alpha_tag(alpha));
      table.columns.push_back(c.values);
    }
  }
  out.files.push_back({stem + ".csv", render_table(table, preamble)});
  if (!cfg.svg) return;
  const std::size_t curve_count = per_alpha.empty() ? 0 : per_alpha.front().second.size();
  for (std::size_t c = 0; c < curve_count; ++c) {
    svg::LinePlot plot;
    const std::string& name = per_alpha.front().second[c].name;
    plot.title = title + ": " + name;
    plot.y_label = name;
    for (const auto& [alpha, curves] : per_alpha) {
      plot.series.push_back({alpha_tag(alpha), grid.positions(), curves[c].values});
    }
    std::ostringstream os;
    svg::write_line_plot(os, plot);
    out.files.push_back({stem + "_" + name + ".svg", os.str()});
  }
}

csv::Preamble preamble_of(const ScenarioConfig& cfg) { return resolved_lines(cfg); }

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "scenario", "gamma", "alpha-h0", "kind",  "amplitude", "beta", "z0",  "n",   "h",
      "method",   "out",   "svg",      "t-end", "cfl",       "snapshots", "kmax", "nk", "input"};
  return keys;
}

ConfigMap parse_config(std::istream& is) {
  ConfigMap map;
  std::string line;
  std::size_t lineno = 0;
  const auto& keys = config_keys();
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw InvalidInput("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    map[key] = trim(line.substr(eq + 1));
  }
  return map;
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::entropy_only: return "entropy-only";
    case Scenario::sound_only: return "sound-only";
    case Scenario::zero_total_entropy: return "zero-entropy";
    case Scenario::evolve_verify: return "evolve";
    case Scenario::dispersion_sweep: return "dispersion";
    case Scenario::profile_dump: return "profile";
    case Scenario::decompose_file: return "decompose";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& raw) {
  std::string name = trim(raw);
  std::replace(name.begin(), name.end(), '_', '-');
  if (name == "entropy-only") return Scenario::entropy_only;
  if (name == "sound-only") return Scenario::sound_only;
  if (name == "zero-entropy" || name == "zero-total-entropy") return Scenario::zero_total_entropy;
  if (name == "evolve" || name == "evolve-verify") return Scenario::evolve_verify;
  if (name == "dispersion" || name == "dispersion-sweep") return Scenario::dispersion_sweep;
  if (name == "profile" || name == "profile-dump") return Scenario::profile_dump;
  if (name == "decompose" || name == "decompose-file") return Scenario::decompose_file;
  throw InvalidInput("unknown scenario '" + raw + "'");
}

ScenarioConfig resolve_config(const ConfigMap& values) {
  ScenarioConfig cfg;
  auto has = [&](const char* k) { return values.count(k) > 0; };
  auto get = [&](const char* k) { return values.at(k); };

  if (!has("scenario")) throw InvalidInput("config: missing key 'scenario'");
  cfg.scenario = parse_scenario(get("scenario"));
  if (cfg.scenario == Scenario::dispersion_sweep || cfg.scenario == Scenario::decompose_file) {
    cfg.alphaH0 = {0.0};
  }
  if (has("gamma")) cfg.gamma = to_double("gamma", get("gamma"));
  if (has("alpha-h0")) cfg.alphaH0 = to_list("alpha-h0", get("alpha-h0"));
  if (has("kind")) {
    const std::string k = trim(get("kind"));
    if (k == "gaussian" || k == "a") cfg.kind = PulseKind::gaussian;
    else if (k == "derivative" || k == "b") cfg.kind = PulseKind::gaussian_derivative;
    else if (k == "both") cfg.kind.reset();
    else throw InvalidInput("config key 'kind': expected gaussian, derivative or both");
  }
  if (has("amplitude")) cfg.amplitude = to_double("amplitude", get("amplitude"));
  if (has("beta")) cfg.beta = to_double("beta", get("beta"));
  if (has("z0")) cfg.z0 = to_double("z0", get("z0"));
  if (has("n")) cfg.n = to_size("n", get("n"));
  if (has("h")) cfg.h = to_double("h", get("h"));
  if (has("method")) {
    const std::string m = trim(get("method"));
    if (m == "bvp") cfg.method = SolveMethod::bvp;
    else if (m == "quadrature") cfg.method = SolveMethod::quadrature;
    else throw InvalidInput("config key 'method': expected bvp or quadrature");
  }
  cfg.out_dir = has("out") ? trim(get("out")) : "out/" + scenario_name(cfg.scenario);
  if (has("svg")) cfg.svg = to_bool("svg", get("svg"));
  if (has("t-end")) cfg.t_end = to_double("t-end", get("t-end"));
  if (has("cfl")) cfg.cfl = to_double("cfl", get("cfl"));
  if (has("snapshots")) cfg.snapshots = to_size("snapshots", get("snapshots"));
  if (has("kmax")) cfg.kmax = to_double("kmax", get("kmax"));
  if (has("nk")) cfg.nk = to_size("nk", get("nk"));
  if (has("input")) cfg.input = trim(get("input"));

  if (cfg.beta <= 0.0) throw InvalidInput("beta must be positive");
  if (cfg.n < Grid1D::kMinSamples) throw InvalidInput("n must be at least 16");
  if (cfg.h <= 0.0) throw InvalidInput("h must be positive");
  if (cfg.snapshots == 0) throw InvalidInput("snapshots must be positive");
  if (cfg.nk < 2) throw InvalidInput("nk must be at least 2");
  if (cfg.scenario == Scenario::decompose_file && cfg.input.empty()) {
    throw InvalidInput("decompose needs an input field CSV");
  }
  return cfg;
}

std::vector<std::string> resolved_lines(const ScenarioConfig& cfg) {
  std::string alphas;
  for (std::size_t i = 0; i < cfg.alphaH0.size(); ++i) {
    if (i) alphas += ",";
    alphas += format_double(cfg.alphaH0[i]);
  }
  return {
      "scenario = " + scenario_name(cfg.scenario),
      "gamma = " + format_double(cfg.gamma),
      "alpha-h0 = " + alphas,
      "kind = " + (cfg.kind ? kind_name(*cfg.kind) : std::string("both")),
      "amplitude = " + format_double(cfg.amplitude),
      "beta = " + format_double(cfg.beta),
      "z0 = " + format_double(cfg.z0),
      "n = " + std::to_string(cfg.n),
      "h = " + format_double(cfg.h),
      "method = " + std::string(cfg.method == SolveMethod::bvp ? "bvp" : "quadrature"),
      "out = " + cfg.out_dir,
      "svg = " + std::string(cfg.svg ? "true" : "false"),
      "t-end = " + format_double(cfg.t_end),
      "cfl = " + format_double(cfg.cfl),
      "snapshots = " + std::to_string(cfg.snapshots),
      "kmax = " + format_double(cfg.kmax),
      "nk = " + std::to_string(cfg.nk),
      "input = " + cfg.input,
  };
}

ScenarioOutput run_entropy_only(const ScenarioConfig& cfg) {
  ScenarioOutput out;
  const csv::Preamble pre = preamble_of(cfg);
  for (PulseKind kind : kinds_of(cfg)) {
    std::vector<std::pair<double, std::vector<Curve>>> panel;
    std::optional<Grid1D> grid;
    for (double alpha : cfg.alphaH0) {
      const BackgroundProfile prof = gated_profile(cfg, alpha, cfg.n);
      grid = prof.grid;
      FieldState total = FieldState::zeros(prof.grid);
      total.P = make_pulse(pulse_of(cfg, kind), prof.grid);
      total.Phi = entropy_phi_from_p(total.P, prof);
      const ModeSplit split = decompose(total, prof, options_of(cfg));
      out.metrics.push_back(
          {"acoustic_leak", kind_name(kind), alpha, l2_norm(split.acoustic) / l2_norm(total)});
      panel.push_back({alpha, {{"P0", total.P}, {"Phi0", total.Phi}}});
    }
    emit_panel(out, cfg, "entropy_only_" + kind_name(kind),
               "Entropy mode (" + kind_name(kind) + ")", *grid, panel, pre);
  }
  out.files.push_back({"summary.csv", render_metrics(out.metrics, pre)});
  return out;
}

ScenarioOutput run_sound_only(const ScenarioConfig& cfg) {
  ScenarioOutput out;
  const csv::Preamble pre = preamble_of(cfg);
  for (PulseKind kind : kinds_of(cfg)) {
    std::vector<std::pair<double, std::vector<Curve>>> panel;
    std::optional<Grid1D> grid;
    for (double alpha : cfg.alphaH0) {
      const BackgroundProfile prof = gated_profile(cfg, alpha, cfg.n);
      grid = prof.grid;
      FieldState total = FieldState::zeros(prof.grid);
      total.Phi = make_pulse(pulse_of(cfg, kind), prof.grid);
      total.P = acoustic_p_from_phi(total.Phi, prof);
      const ModeSplit split = decompose(total, prof, options_of(cfg));
      out.metrics.push_back(
          {"entropy_leak", kind_name(kind), alpha, l2_norm(split.entropy) / l2_norm(total)});
      panel.push_back({alpha, {{"P_a", total.P}, {"Phi_a", total.Phi}}});
    }
    emit_panel(out, cfg, "sound_only_" + kind_name(kind), "Sound (" + kind_name(kind) + ")",
               *grid, panel, pre);
  }
  out.files.push_back({"summary.csv", render_metrics(out.metrics, pre)});
  return out;
}

ScenarioOutput run_zero_total_entropy(const ScenarioConfig& cfg) {
  ScenarioOutput out;
  const csv::Preamble pre = preamble_of(cfg);
  for (PulseKind kind : kinds_of(cfg)) {
    std::vector<std::pair<double, std::vector<Curve>>> panel;
    std::optional<Grid1D> grid;
    for (double alpha : cfg.alphaH0) {
      const BackgroundProfile prof = gated_profile(cfg, alpha, cfg.n);
      grid = prof.grid;
      const Field P0 = make_pulse(pulse_of(cfg, kind), prof.grid);
      const Field Phi0 = entropy_phi_from_p(P0, prof);
      Field Phi_a(Phi0.size());
      for (std::size_t i = 0; i < Phi0.size(); ++i) Phi_a[i] = -Phi0[i];
      const Field P_a = acoustic_p_from_phi(Phi_a, prof);

      FieldState total = FieldState::zeros(prof.grid);
      for (std::size_t i = 0; i < P0.size(); ++i) {
        total.P[i] = P0[i] + P_a[i];
        total.Phi[i] = Phi0[i] + Phi_a[i];
      }
      const ModeSplit split = decompose(total, prof, options_of(cfg));
      FieldState built_acoustic{prof.grid, Field(P0.size(), 0.0), P_a, Phi_a, 0.0};
      FieldState built_entropy{prof.grid, Field(P0.size(), 0.0), P0, Phi0, 0.0};
      const double err = std::max(state_difference(split.acoustic, built_acoustic),
                                  state_difference(split.entropy, built_entropy));
      out.metrics.push_back(
          {"total_phi_max", kind_name(kind), alpha, numerics::max_abs(total.Phi)});
      out.metrics.push_back({"split_recovery_error", kind_name(kind), alpha, err});
      panel.push_back({alpha, {{"P_a", P_a}, {"P_0", P0}}});
    }
    emit_panel(out, cfg, "zero_entropy_" + kind_name(kind),
               "Zero total entropy (" + kind_name(kind) + ")", *grid, panel, pre);
  }
  out.files.push_back({"summary.csv", render_metrics(out.metrics, pre)});
  return out;
}

ScenarioOutput run_evolve_verify(const ScenarioConfig& cfg) {
  ScenarioOutput out;
  const csv::Preamble pre = preamble_of(cfg);
  const PulseKind kind = cfg.kind.value_or(PulseKind::gaussian);
  for (double alpha : cfg.alphaH0) {
    const BackgroundProfile prof = gated_profile(cfg, alpha, cfg.n);
    // Mixed data: a pressure pulse at rest carries both modes.
    FieldState initial = FieldState::zeros(prof.grid);
    initial.P = make_pulse(pulse_of(cfg, kind), prof.grid);

    EvolveConfig ec;
    ec.cfl = cfg.cfl;
    ec.t_end = cfg.t_end;
    validate(ec);
    const double dt_max = max_stable_dt(prof, cfg.cfl);
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_end / dt_max));
    ec.output_every = std::max<std::size_t>(1, steps / cfg.snapshots);
    const EvolveResult res = run(initial, prof, ec);

    const std::string dir = alpha_tag(alpha) + "/";
    csv::Table drift;
    drift.header = {"t", "entropy_drift", "energy_drift"};
    drift.columns.resize(3);
    const FieldState& entropy0 = res.splits.front().entropy;
    const double e0 = res.energy_log.front().total;
    double max_entropy_drift = 0.0;
    double max_energy_drift = 0.0;
    for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
      const double sd = state_difference(res.splits[k].entropy, entropy0);
      const double ed = std::abs(res.energy_log[k].total - e0) / e0;
      max_entropy_drift = std::max(max_entropy_drift, sd);
      max_energy_drift = std::max(max_energy_drift, ed);
      drift.columns[0].push_back(res.snapshots[k].t);
      drift.columns[1].push_back(sd);
      drift.columns[2].push_back(ed);

      char name[32];
      std::snprintf(name, sizeof name, "snapshot_%03zu.csv", k);
      std::ostringstream os;
      csv::Preamble snap_pre = pre;
      snap_pre.push_back("t = " + format_double(res.snapshots[k].t));
      csv::write_field_state(os, res.snapshots[k], snap_pre);
      out.files.push_back({dir + name, os.str()});
    }
    std::ostringstream energy;
    csv::write_energy_log(energy, res.energy_log, pre);
    out.files.push_back({dir + "energy.csv", energy.str()});
    out.files.push_back({dir + "drift.csv", render_table(drift, pre)});
    out.metrics.push_back({"max_entropy_drift", kind_name(kind), alpha, max_entropy_drift});
    out.metrics.push_back({"max_energy_drift", kind_name(kind), alpha, max_energy_drift});
  }
  out.files.push_back({"summary.csv", render_metrics(out.metrics, pre)});
  return out;
}

ScenarioOutput run_dispersion_sweep(const ScenarioConfig& cfg) {
  ScenarioOutput out;
  const csv::Preamble pre = preamble_of(cfg);
  for (double alpha : cfg.alphaH0) {
    if (std::abs(alpha) >= AtmosphereParams::kIsothermalThreshold) {
      throw InvalidInput("dispersion sweep requires alphaH0 = 0, got " + format_double(alpha));
    }
  }
  const AtmosphereParams p = params_for(cfg, 0.0);
  csv::Table table;
  table.header = {"kx", "ky", "kz", "omega1", "omega3"};
  table.columns.resize(5);
  for (std::size_t i = 0; i < cfg.nk; ++i) {
    const double kx = cfg.kmax * static_cast<double>(i) / static_cast<double>(cfg.nk - 1);
    for (std::size_t j = 0; j < cfg.nk; ++j) {
      const double kz = cfg.kmax * static_cast<double>(j) / static_cast<double>(cfg.nk - 1);
      const DispersionRoots r = omega_roots(kx, 0.0, kz, p);
      table.columns[0].push_back(kx);
      table.columns[1].push_back(0.0);
      table.columns[2].push_back(kz);
      table.columns[3].push_back(r.omega12);
      table.columns[4].push_back(r.omega34);
    }
  }
  out.files.push_back({"dispersion.csv", render_table(table, pre)});
  return out;
}

ScenarioOutput run_profile_dump(const ScenarioConfig& cfg) {
  ScenarioOutput out;
  const csv::Preamble pre = preamble_of(cfg);
  for (double alpha : cfg.alphaH0) {
    const BackgroundProfile prof = gated_profile(cfg, alpha, cfg.n);
    const StabilityReport st = check_stability(prof);
    out.metrics.push_back({"min_nu", "-", alpha, st.min_nu});
    std::ostringstream os;
    csv::write_profile(os, prof, pre);
    out.files.push_back({"profile_" + alpha_tag(alpha) + ".csv", os.str()});
  }
  out.files.push_back({"summary.csv", render_metrics(out.metrics, pre)});
  return out;
}

ScenarioOutput run_decompose_file(const ScenarioConfig& cfg) {
  if (cfg.alphaH0.size() != 1) throw InvalidInput("decompose takes a single alpha-h0 value");
  std::ifstream in(cfg.input);
  if (!in) throw InvalidInput("cannot open input field CSV '" + cfg.input + "'");
  const FieldState total = csv::read_field_state(in);

  ScenarioConfig local = cfg;
  local.n = total.grid.size();
  local.h = total.grid.height();
  const double alpha = cfg.alphaH0.front();
  const BackgroundProfile prof = gated_profile(local, alpha, local.n);
  FieldState on_profile = total;
  on_profile.grid = prof.grid;
  const ModeSplit split = decompose(on_profile, prof, options_of(cfg));

  ScenarioOutput out;
  const csv::Preamble pre = preamble_of(local);
  std::ostringstream os;
  csv::write_mode_split(os, split, pre);
  out.files.push_back({"split.csv", os.str()});
  const EnergyRecord e = energy_record(on_profile, split, prof);
  std::ostringstream es;
  csv::write_energy_log(es, std::span<const EnergyRecord>(&e, 1), pre);
  out.files.push_back({"energy.csv", es.str()});
  const double norm = l2_norm(on_profile);
  out.metrics.push_back({"acoustic_fraction", "-", alpha, norm > 0 ? l2_norm(split.acoustic) / norm : 0.0});
  out.metrics.push_back({"entropy_fraction", "-", alpha, norm > 0 ? l2_norm(split.entropy) / norm : 0.0});
  out.files.push_back({"summary.csv", render_metrics(out.metrics, pre)});
  return out;
}

ScenarioOutput run(const ScenarioConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::entropy_only: return run_entropy_only(cfg);
    case Scenario::sound_only: return run_sound_only(cfg);
    case Scenario::zero_total_entropy: return run_zero_total_entropy(cfg);
    case Scenario::evolve_verify: return run_evolve_verify(cfg);
    case Scenario::dispersion_sweep: return run_dispersion_sweep(cfg);
    case Scenario::profile_dump: return run_profile_dump(cfg);
    case Scenario::decompose_file: return run_decompose_file(cfg);
  }
  throw InvalidInput("unknown scenario");
}

void write_output(const ScenarioOutput& output, const ScenarioConfig& config,
                  const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  fs::create_directories(root);
  {
    std::ofstream f(root / "config.resolved", std::ios::binary);
    for (const std::string& line : resolved_lines(config)) f << line << '\n';
    if (!f) throw InvalidInput("cannot write " + (root / "config.resolved").string());
  }
  for (const OutputFile& file : output.files) {
    const fs::path path = root / file.name;
    fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    f << file.content;
    if (!f) throw InvalidInput("cannot write " + path.string());
  }
}

}  // namespace modesplit::scenarios
