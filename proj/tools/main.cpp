#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modesplit/csv.hpp"
#include "modesplit/error.hpp"
#include "modesplit/scenarios.hpp"

namespace ms = modesplit;
namespace sc = modesplit::scenarios;

namespace {

// One line, key=value pairs, message last and quoted.
void report_error(const std::string& code, const std::string& message,
                  const std::string& extra = {}) {
  std::string quoted;
  for (char c : message) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += (c == '\n') ? ' ' : c;
  }
  std::cerr << "error code=" << code;
  if (!extra.empty()) std::cerr << ' ' << extra;
  std::cerr << " message=\"" << quoted << "\"\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Acoustic/entropy mode decomposition for a stratified ideal gas"};
  // --h is the domain height, so help is long-form only
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file; flags override it")
      ->check(CLI::ExistingFile);

  // Flags mirror the config keys; kept as text and validated by the config resolver.
  std::map<std::string, std::string> flag_values;
  std::vector<std::pair<std::string, CLI::Option*>> flag_opts;
  const std::vector<std::pair<std::string, std::string>> valued{
      {"gamma", "adiabatic index"},
      {"alpha-h0", "scale-height gradient(s), comma separated"},
      {"kind", "pulse kind: gaussian, derivative or both"},
      {"amplitude", "pulse amplitude"},
      {"beta", "pulse width in units of H(0)"},
      {"z0", "pulse centre"},
      {"n", "grid samples"},
      {"h", "domain height"},
      {"method", "R solver: bvp or quadrature"},
      {"out", "output directory"},
      {"t-end", "evolve: final time"},
      {"cfl", "evolve: CFL factor"},
      {"snapshots", "evolve: number of snapshot intervals"},
      {"kmax", "dispersion: largest wavenumber"},
      {"nk", "dispersion: samples per axis"},
  };
  for (const auto& [key, help] : valued) {
    flag_opts.emplace_back(key, app.add_option("--" + key, flag_values[key], help));
  }
  bool svg = false;
  CLI::Option* svg_opt = app.add_flag("--svg", svg, "also write SVG line plots");
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "do not print the summary");

  std::string input;
  std::map<CLI::App*, std::string> scenario_of;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"profile", "dump the background profile"},
           {"dispersion", "sweep the isothermal dispersion roots"},
           {"entropy-only", "pure entropy mode figures"},
           {"sound-only", "pure sound figures"},
           {"zero-entropy", "zero total entropy figures"},
           {"evolve", "evolve mixed data and track the split"},
           {"decompose", "split a field CSV (z,Uz,P,Phi)"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    scenario_of[sub] = name;
    if (name == "decompose") sub->add_option("field", input, "field CSV")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error("usage", e.what());
    return 2;
  }

  sc::ConfigMap values;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    values = sc::parse_config(in);
  }
  for (const auto& [key, opt] : flag_opts) {
    if (opt->count() > 0) values[key] = flag_values[key];
  }
  if (svg_opt->count() > 0) values["svg"] = svg ? "true" : "false";
  values["scenario"] = scenario_of.at(app.get_subcommands().front());
  if (!input.empty()) values["input"] = input;

  const sc::ScenarioConfig cfg = sc::resolve_config(values);
  const sc::ScenarioOutput out = sc::run(cfg);
  sc::write_output(out, cfg, cfg.out_dir);
  if (!quiet) {
    std::cout << "wrote " << out.files.size() + 1 << " files to " << cfg.out_dir << '\n';
    for (const sc::Metric& m : out.metrics) {
      std::cout << m.name << ' ' << m.kind << " alphaH0=" << ms::csv::format_double(m.alphaH0)
                << ' ' << ms::csv::format_double(m.value) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ms::UnstableBackground& e) {
    report_error(e.code(), e.what(),
                 "nu_min=" + ms::csv::format_double(e.min_nu()) +
                     " z=" + ms::csv::format_double(e.z_at_min()));
  } catch (const ms::Error& e) {
    report_error(e.code(), e.what());
  } catch (const std::exception& e) {
    report_error("internal", e.what());
  }
  return 1;
}
