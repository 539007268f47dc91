// hanle_sim: B0 scans of Hanle/EIT/EIA lock-in signals from a JSON config.
//
//   hanle_sim scan config.json [--jobs N] [--output PATH] [--doppler on|off]
//   hanle_sim verify
//   hanle_sim presets
//
// Exit codes: 0 success, 1 verify failure, 2 usage/config error, 3 solver error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hanle/config.hpp"
#include "hanle/errors.hpp"
#include "hanle/presets.hpp"
#include "hanle/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct ScanOptions {
  std::string config_path;
  int jobs = 0;  // 0: take the config value
  std::string output;
  std::string doppler;  // "", "on" or "off"
};

int run_scan_command(const ScanOptions& opt) {
  hanle::ScanConfig config;
  try {
    config = hanle::load_config(opt.config_path);
  } catch (const hanle::ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kExitConfig;
  }
  if (opt.jobs > 0) config.jobs = opt.jobs;
  if (!opt.output.empty()) config.output_path = opt.output;
  if (opt.doppler == "off") {
    config.doppler.reset();
  } else if (opt.doppler == "on" && !config.doppler) {
    config.doppler = hanle::DetuningGrid{};
  }

  std::string csv;
  try {
    csv = hanle::format_csv(hanle::run_scan(config), config.outputs);
  } catch (const hanle::SolverError& e) {
    fmt::print(stderr, "solver error: {}\n", e.what());
    return kExitSolver;
  } catch (const hanle::IntegrationError& e) {
    fmt::print(stderr, "solver error: {}\n", e.what());
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kExitConfig;
  }

  if (config.output_path.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
  out << csv;
  out.close();
  if (!out) {
    fmt::print(stderr, "config error: output: cannot write '{}'\n", config.output_path);
    return kExitConfig;
  }
  return 0;
}

int run_verify_command() {
  try {
    const auto checks = hanle::run_verification();
    std::cout << hanle::format_checks(checks);
    for (const auto& c : checks)
      if (!c.passed) return kExitVerifyFailed;
    return 0;
  } catch (const std::exception& e) {
    fmt::print(stderr, "verify: {}\n", e.what());
    return kExitVerifyFailed;
  }
}

void print_presets() {
  for (const hanle::Preset& p : hanle::presets()) fmt::print("{:<28} {}\n", p.name, p.description);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hanle/EIT/EIA coherence-resonance simulator"};
  app.require_subcommand(1);

  ScanOptions scan_opt;
  CLI::App* scan = app.add_subcommand("scan", "B0 scan of static and lock-in signals, CSV output");
  scan->add_option("config", scan_opt.config_path, "JSON configuration file")->required();
  scan->add_option("--jobs", scan_opt.jobs, "worker threads (overrides the config)")->check(CLI::PositiveNumber);
  scan->add_option("--output", scan_opt.output, "CSV path (overrides the config; default stdout)");
  scan->add_option("--doppler", scan_opt.doppler, "force detuning averaging on or off")
      ->check(CLI::IsMember({"on", "off"}));

  CLI::App* verify = app.add_subcommand("verify", "compare perturbative signals with the time-domain oracle");
  CLI::App* list = app.add_subcommand("presets", "list the built-in 87Rb D1 presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (scan->parsed()) return run_scan_command(scan_opt);
  if (verify->parsed()) return run_verify_command();
  if (list->parsed()) print_presets();
  return 0;
}
