#include "hanle/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "hanle/presets.hpp"

namespace hanle {
namespace {

using nlohmann::json;

std::string join(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError(join(path, key), "unknown key");
  }
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
  return j;
}

double number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(join(path, key), "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(join(path, key), "must be finite");
  return x;
}

int integer(const json& obj, const std::string& key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(join(path, key), "expected an integer");
  return v.get<int>();
}

bool boolean(const json& obj, const std::string& key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_boolean()) throw ConfigError(join(path, key), "expected true or false");
  return v.get<bool>();
}

std::string string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(join(path, key), "expected a string");
  return v.get<std::string>();
}

Polarization parse_polarization(const std::string& name, const std::string& path) {
  if (name == "x") return linear_polarization_x();
  if (name == "z") return linear_polarization_z();
  throw ConfigError(path, fmt::format("unknown polarization '{}' (expected \"x\" or \"z\")", name));
}

// Fields of SystemParams reachable from a config; b0 is the scan axis.
const std::set<std::string> kParamKeys = {"Fg",         "Fe",           "gg",           "ge",
                                          "rabi",       "detuning",     "transit_rate", "collision_rate",
                                          "branching",  "b1",           "modulation_freq", "polarization"};

// Applies `obj` on top of `p`. Quantum numbers and g factors are mandatory
// when there is no preset underneath.
void apply_params(const json& obj, const std::string& path, bool have_base, SystemParams& p) {
  require_object(obj, path);
  reject_unknown(obj, path, kParamKeys);

  for (const char* key : {"Fg", "Fe", "gg", "ge", "rabi"}) {
    if (!have_base && !obj.contains(key)) throw ConfigError(join(path, key), "required when no preset is given");
  }
  if (obj.contains("Fg") || obj.contains("Fe") || obj.contains("gg") || obj.contains("ge")) {
    const double fg = obj.contains("Fg") ? number(obj, "Fg", path) : p.state.Fg.value();
    const double fe = obj.contains("Fe") ? number(obj, "Fe", path) : p.state.Fe.value();
    const double gg = obj.contains("gg") ? number(obj, "gg", path) : p.state.gg;
    const double ge = obj.contains("ge") ? number(obj, "ge", path) : p.state.ge;
    try {
      p.state = AngularState::make(fg, fe, gg, ge);
    } catch (const ArgumentError& e) {
      throw ConfigError(join(path, obj.contains("Fe") ? "Fe" : "Fg"), e.what());
    }
  }

  auto set = [&](const char* key, double& field) {
    if (obj.contains(key)) field = number(obj, key, path);
  };
  set("rabi", p.rabi);
  set("detuning", p.detuning);
  set("transit_rate", p.transit_rate);
  set("collision_rate", p.collision_rate);
  set("branching", p.branching);
  set("modulation_freq", p.modulation_freq);
  if (obj.contains("polarization")) {
    p.polarization = parse_polarization(string(obj, "polarization", path), join(path, "polarization"));
  }
  // The modulation amplitude follows the transit rate unless pinned.
  p.b1 = obj.contains("b1") ? number(obj, "b1", path) : default_modulation_amplitude(p.transit_rate);
}

// Maps the first violated SystemParams invariant onto its config field.
void check_params(const SystemParams& p, const std::string& path) {
  auto fail = [&](const char* key, const std::string& message) { throw ConfigError(join(path, key), message); };
  if (p.rabi < 0.0) fail("rabi", "must be >= 0");
  if (!(p.transit_rate > 0.0)) fail("transit_rate", "must be > 0");
  if (p.collision_rate < 0.0) fail("collision_rate", "must be >= 0");
  if (p.branching < 0.0 || p.branching > 1.0) fail("branching", "must lie in [0, 1]");
  if (p.b1 < 0.0) fail("b1", "must be >= 0");
  if (p.modulation_freq < 0.0) fail("modulation_freq", "must be >= 0");
  try {
    p.validate();
    p.require_relaxation();
  } catch (const ParameterError& e) {
    throw ConfigError(path, e.what());
  }
}

TransitionConfig parse_transition(const json& obj, const std::string& path, const std::string& params_path) {
  TransitionConfig t;
  bool have_base = false;
  if (obj.contains("preset")) {
    const std::string name = string(obj, "preset", path);
    const auto preset = find_preset(name);
    if (!preset) throw ConfigError(join(path, "preset"), fmt::format("unknown preset '{}'", name));
    t.label = preset->name;
    t.params = preset->params;
    t.weight = preset->weight;
    have_base = true;
  }
  if (obj.contains("params")) {
    apply_params(obj.at("params"), params_path, have_base, t.params);
  } else if (!have_base) {
    throw ConfigError(path.empty() ? "preset" : join(path, "preset"), "either 'preset' or 'params' is required");
  }
  if (obj.contains("label")) t.label = string(obj, "label", path);
  if (obj.contains("weight")) t.weight = number(obj, "weight", path);
  if (!(t.weight > 0.0)) throw ConfigError(join(path, "weight"), "must be > 0");
  check_params(t.params, params_path);
  return t;
}

}  // namespace

ScanConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", fmt::format("invalid JSON: {}", e.what()));
  }
  require_object(root, "");
  reject_unknown(root, "",
                 {"preset", "params", "weight", "label", "transitions", "scan", "doppler", "outputs", "output", "jobs"});

  ScanConfig config;
  if (root.contains("transitions")) {
    for (const char* key : {"preset", "params", "weight", "label"}) {
      if (root.contains(key)) throw ConfigError(key, "not allowed together with 'transitions'");
    }
    const json& list = root.at("transitions");
    if (!list.is_array() || list.empty()) throw ConfigError("transitions", "expected a non-empty array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = fmt::format("transitions[{}]", i);
      require_object(list[i], path);
      reject_unknown(list[i], path, {"preset", "params", "weight", "label"});
      config.transitions.push_back(parse_transition(list[i], path, join(path, "params")));
    }
  } else {
    config.transitions.push_back(parse_transition(root, "", "params"));
  }

  if (!root.contains("scan")) throw ConfigError("scan", "required");
  {
    const json& scan = require_object(root.at("scan"), "scan");
    reject_unknown(scan, "scan", {"b0_min", "b0_max", "count"});
    for (const char* key : {"b0_min", "b0_max", "count"}) {
      if (!scan.contains(key)) throw ConfigError(join("scan", key), "required");
    }
    config.b0_min = number(scan, "b0_min", "scan");
    config.b0_max = number(scan, "b0_max", "scan");
    config.count = integer(scan, "count", "scan");
    if (config.count < 2) throw ConfigError("scan.count", fmt::format("must be >= 2 (got {})", config.count));
    if (!(config.b0_min < config.b0_max)) throw ConfigError("scan.b0_max", "must be greater than scan.b0_min");
  }

  if (root.contains("doppler")) {
    const json& d = require_object(root.at("doppler"), "doppler");
    reject_unknown(d, "doppler", {"enabled", "detuning_min", "detuning_max", "n_points", "weighting", "gaussian_width"});
    const bool enabled = d.contains("enabled") ? boolean(d, "enabled", "doppler") : true;
    DetuningGrid grid;
    if (d.contains("detuning_min")) grid.min = number(d, "detuning_min", "doppler");
    if (d.contains("detuning_max")) grid.max = number(d, "detuning_max", "doppler");
    if (d.contains("n_points")) grid.n_points = integer(d, "n_points", "doppler");
    if (d.contains("gaussian_width")) grid.gaussian_width = number(d, "gaussian_width", "doppler");
    if (d.contains("weighting")) {
      const std::string w = string(d, "weighting", "doppler");
      if (w == "uniform") {
        grid.weighting = DetuningWeighting::Uniform;
      } else if (w == "gaussian") {
        grid.weighting = DetuningWeighting::Gaussian;
      } else {
        throw ConfigError("doppler.weighting", fmt::format("unknown weighting '{}'", w));
      }
    }
    if (!(grid.min < grid.max)) throw ConfigError("doppler.detuning_max", "must be greater than doppler.detuning_min");
    if (grid.n_points < 3 || grid.n_points % 2 == 0) throw ConfigError("doppler.n_points", "must be odd and >= 3");
    if (!(grid.gaussian_width > 0.0)) throw ConfigError("doppler.gaussian_width", "must be > 0");
    if (enabled) config.doppler = grid;
  }

  if (root.contains("outputs")) {
    const json& o = require_object(root.at("outputs"), "outputs");
    reject_unknown(o, "outputs", {"static", "inphase", "quadrature"});
    if (o.contains("static")) config.outputs.lambda_static = boolean(o, "static", "outputs");
    if (o.contains("inphase")) config.outputs.inphase = boolean(o, "inphase", "outputs");
    if (o.contains("quadrature")) config.outputs.quadrature = boolean(o, "quadrature", "outputs");
  }

  if (root.contains("output")) config.output_path = string(root, "output", "");
  if (root.contains("jobs")) {
    config.jobs = integer(root, "jobs", "");
    if (config.jobs < 1) throw ConfigError("jobs", "must be >= 1");
  }
  return config;
}

ScanConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", fmt::format("cannot read '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::vector<SignalPoint> run_scan(const ScanConfig& config) {
  const std::vector<double> grid = config.grid();
  std::vector<SignalPoint> total(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) total[i].b0 = grid[i];

  for (const TransitionConfig& t : config.transitions) {
    const std::vector<SignalPoint> part = config.doppler ? scan_b0_averaged(t.params, grid, *config.doppler, config.jobs)
                                                         : scan_b0(t.params, grid, config.jobs);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      total[i].lambda_static += t.weight * part[i].lambda_static;
      total[i].lambda_inphase += t.weight * part[i].lambda_inphase;
      total[i].lambda_quadrature += t.weight * part[i].lambda_quadrature;
    }
  }
  return total;
}

std::string format_csv(const std::vector<SignalPoint>& points, const OutputSelection& outputs) {
  std::string out(kCsvHeader);
  out += '\n';
  auto column = [](bool selected, double v) { return selected ? fmt::format("{:.15g}", v) : std::string(); };
  for (const SignalPoint& p : points) {
    out += fmt::format("{:.15g},{},{},{}\n", p.b0, column(outputs.lambda_static, p.lambda_static),
                       column(outputs.inphase, p.lambda_inphase), column(outputs.quadrature, p.lambda_quadrature));
  }
  return out;
}

}  // namespace hanle
