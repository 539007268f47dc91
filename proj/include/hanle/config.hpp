#pragma once

// JSON scan configuration (schema in docs/config-schema.md), the scan driver
// and the CSV writer used by the command-line tool.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hanle/doppler.hpp"
#include "hanle/params.hpp"

namespace hanle {

/// Malformed or out-of-range configuration. `field()` is the dotted path of
/// the offending entry, e.g. "transitions[1].params.rabi".
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct TransitionConfig {
  std::string label;
  SystemParams params;
  double weight = 1.0;
};

struct OutputSelection {
  bool lambda_static = true;
  bool inphase = true;
  bool quadrature = true;
};

struct ScanConfig {
  std::vector<TransitionConfig> transitions;
  double b0_min = -0.05;
  double b0_max = 0.05;
  int count = 201;
  std::optional<DetuningGrid> doppler;
  OutputSelection outputs;
  std::string output_path;  ///< empty: standard output
  int jobs = 1;

  std::vector<double> grid() const { return linspace(b0_min, b0_max, count); }
};

ScanConfig parse_config(std::string_view json_text);
ScanConfig load_config(const std::filesystem::path& path);

/// Weighted sum of the per-transition scans, in grid order.
std::vector<SignalPoint> run_scan(const ScanConfig& config);

inline constexpr std::string_view kCsvHeader = "b0_larmor,lambda_static,lambda_inphase,lambda_quadrature";

/// Header plus one row per point, 15 significant digits; deselected columns are empty.
std::string format_csv(const std::vector<SignalPoint>& points, const OutputSelection& outputs);

}  // namespace hanle
