#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modesplit/decompose.hpp"
#include "modesplit/fields.hpp"

namespace modesplit::scenarios {

enum class Scenario {
  entropy_only,
  sound_only,
  zero_total_entropy,
  evolve_verify,
  dispersion_sweep,
  profile_dump,
  decompose_file,
};

/// Fully resolved run configuration. Keys of the flat config format and CLI
/// flags share the names listed in `config_keys()`.
struct ScenarioConfig {
  Scenario scenario = Scenario::entropy_only;
  double gamma = 1.4;
  std::vector<double> alphaH0{-0.1, 0.0, 0.1};
  /// Empty means both pulse kinds.
  std::optional<PulseKind> kind;
  double amplitude = 1.0;
  double beta = 0.3;
  double z0 = 3.0;
  std::size_t n = 4096;
  double h = 6.0;
  SolveMethod method = SolveMethod::bvp;
  std::string out_dir;
  bool svg = false;
  // evolve
  double t_end = 10.0;
  double cfl = 0.4;
  std::size_t snapshots = 20;
  // dispersion sweep: kx, kz in [0, kmax] on nk points each, ky = 0
  double kmax = 10.0;
  std::size_t nk = 21;
  // decompose
  std::string input;
};

using ConfigMap = std::map<std::string, std::string>;

/// Recognized keys, in the order they are written to config.resolved.
const std::vector<std::string>& config_keys();

/// Parses `key = value` lines. '#' starts a comment; blank lines are skipped.
/// Throws InvalidInput on malformed lines or unknown keys.
ConfigMap parse_config(std::istream& is);

/// Builds a config from key/value pairs; missing keys take scenario defaults
/// (dispersion defaults alpha-h0 to 0). Throws InvalidInput on bad values.
ScenarioConfig resolve_config(const ConfigMap& values);

/// `key = value` lines describing every field of `config`.
std::vector<std::string> resolved_lines(const ScenarioConfig& config);

std::string scenario_name(Scenario scenario);
Scenario parse_scenario(const std::string& name);

struct OutputFile {
  std::string name;
  std::string content;
};

/// Named scalar produced by a run (leak norms, drifts, ...).
struct Metric {
  std::string name;
  std::string kind;
  double alphaH0;
  double value;
};

struct ScenarioOutput {
  std::vector<OutputFile> files;
  std::vector<Metric> metrics;
};

ScenarioOutput run_entropy_only(const ScenarioConfig& config);
ScenarioOutput run_sound_only(const ScenarioConfig& config);
ScenarioOutput run_zero_total_entropy(const ScenarioConfig& config);
ScenarioOutput run_evolve_verify(const ScenarioConfig& config);
ScenarioOutput run_dispersion_sweep(const ScenarioConfig& config);
ScenarioOutput run_profile_dump(const ScenarioConfig& config);
/// Decomposes the FieldState CSV named by config.input.
ScenarioOutput run_decompose_file(const ScenarioConfig& config);

/// Dispatches on config.scenario.
ScenarioOutput run(const ScenarioConfig& config);

/// Writes every output file plus `config.resolved` into `dir` (created if
/// needed).
void write_output(const ScenarioOutput& output, const ScenarioConfig& config,
                  const std::string& dir);

}  // namespace modesplit::scenarios
