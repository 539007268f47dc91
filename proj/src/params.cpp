#include "hanle/params.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hanle/errors.hpp"

namespace hanle {

void SystemParams::validate() const {
  try {
    state.validate();
  } catch (const ArgumentError& e) {
    throw ParameterError(e.what());
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(rabi) || !finite(detuning) || !finite(transit_rate) || !finite(collision_rate) ||
      !finite(branching) || !finite(b0) || !finite(b1) || !finite(modulation_freq)) {
    throw ParameterError("system parameters must be finite: " + describe());
  }
  if (rabi < 0.0) throw ParameterError(fmt::format("rabi must be >= 0 (got {})", rabi));
  if (transit_rate < 0.0) throw ParameterError(fmt::format("transit_rate must be >= 0 (got {})", transit_rate));
  if (collision_rate < 0.0) {
    throw ParameterError(fmt::format("collision_rate must be >= 0 (got {})", collision_rate));
  }
  if (branching < 0.0 || branching > 1.0) {
    throw ParameterError(fmt::format("branching must lie in [0, 1] (got {})", branching));
  }
}

void SystemParams::require_relaxation() const {
  if (!(transit_rate > 0.0)) {
    throw ParameterError(
        fmt::format("transit_rate must be > 0 for a unique steady state (got {})", transit_rate));
  }
}

std::string SystemParams::describe() const {
  return fmt::format(
      "Fg={} Fe={} gg={} ge={} rabi={} detuning={} transit_rate={} collision_rate={} branching={} "
      "b0={} b1={} modulation_freq={}",
      state.Fg.value(), state.Fe.value(), state.gg, state.ge, rabi, detuning, transit_rate,
      collision_rate, branching, b0, b1, modulation_freq);
}

}  // namespace hanle
