#include "hanle/presets.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "hanle/angular.hpp"
#include "hanle/errors.hpp"

namespace hanle {

Preset rb87_d1_preset(int fg, int fe, CellRegime regime) {
  if ((fg != 1 && fg != 2) || (fe != 1 && fe != 2)) {
    throw ArgumentError(fmt::format("87Rb D1 has no Fg={} -> Fe={} transition", fg, fe));
  }
  const double gg = fg == 2 ? kRb87GroundG_F2 : kRb87GroundG_F1;
  const double ge = kRb87ExcitedG;

  Preset preset;
  SystemParams& p = preset.params;
  p.state = AngularState::make(fg, fe, gg, ge);
  p.rabi = 0.01;
  p.detuning = 0.0;
  p.branching = branching_ratio(0.5, 0.5, kRb87NuclearSpin, fe, fg);
  p.polarization = linear_polarization_x();
  if (regime == CellRegime::Vacuum) {
    p.transit_rate = 1e-3;
    p.collision_rate = 0.0;
    p.modulation_freq = 1e-2;
  } else {
    p.transit_rate = 1e-5;
    p.collision_rate = 4.0;
    p.modulation_freq = 1e-3;
  }
  p.b1 = default_modulation_amplitude(p.transit_rate);
  preset.weight = fg == 2 ? kRb87Weight_F2 : kRb87Weight_F1;

  const char* regime_name = regime == CellRegime::Vacuum ? "vacuum" : "buffer";
  preset.name = fmt::format("rb87-d1-Fg{}-Fe{}-{}", fg, fe, regime_name);
  preset.description = fmt::format(
      "87Rb D1 Fg={} -> Fe={}, {} cell (gamma={:g}, gamma_coll={:g}, delta={:g}, b={:.6g}, weight={:g})", fg, fe,
      regime_name, p.transit_rate, p.collision_rate, p.modulation_freq, p.branching, preset.weight);
  return preset;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> v;
    for (CellRegime regime : {CellRegime::Vacuum, CellRegime::Buffer})
      for (int fg : {2, 1})
        for (int fe : {1, 2}) v.push_back(rb87_d1_preset(fg, fe, regime));
    return v;
  }();
  return all;
}

std::optional<Preset> find_preset(std::string_view name) {
  const auto& all = presets();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Preset& p) { return p.name == name; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

}  // namespace hanle
