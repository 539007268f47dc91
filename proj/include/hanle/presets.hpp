#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanle/params.hpp"

namespace hanle {

/// 87Rb D1: J = 1/2 in both levels, I = 3/2.
inline constexpr double kRb87NuclearSpin = 1.5;
/// Ground hyperfine gyromagnetic factors (sign per level) and the excited one.
inline constexpr double kRb87GroundG_F2 = 0.5;
inline constexpr double kRb87GroundG_F1 = -0.5;
inline constexpr double kRb87ExcitedG = 1.0 / 6.0;
/// Thermal occupation of the ground hyperfine levels, (2F+1)/8.
inline constexpr double kRb87Weight_F2 = 5.0 / 8.0;
inline constexpr double kRb87Weight_F1 = 3.0 / 8.0;

/// A named parameter bundle with its thermal weight.
struct Preset {
  std::string name;
  std::string description;
  SystemParams params;
  double weight = 1.0;
};

/// Cell regimes: no buffer gas, or 30 torr Ne (collisional excited-state decoherence).
enum class CellRegime { Vacuum, Buffer };

/// 87Rb D1 Fg -> Fe transition in the given regime.
Preset rb87_d1_preset(int fg, int fe, CellRegime regime);

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(std::string_view name);

}  // namespace hanle
