#pragma once

// Self-check run by `hanle_sim verify`: perturbative lock-in signals against
// the time-domain oracle at pinned parameter points, plus the closed-transition
// trace test.

#include <functional>
#include <string>
#include <vector>

#include "hanle/parametric.hpp"

namespace hanle {

struct CheckResult {
  std::string name;
  double value = 0.0;      ///< measured error
  double tolerance = 0.0;  ///< pass iff value <= tolerance
  bool passed = false;
};

/// Stand-in for signal_point, so a deliberately broken solver can be checked.
using PointSolver = std::function<SignalPoint(const SystemParams&, double b0)>;

struct VerifyPoint {
  std::string name;
  SystemParams params;  ///< params.b0 is the field of the comparison
};

inline constexpr double kVerifyRelativeTolerance = 0.01;
inline constexpr double kVerifyTraceTolerance = 1e-10;

/// The pinned oracle comparison points (Larmor(B1) = 0.1 gamma each).
std::vector<VerifyPoint> verify_points();

/// Relative error |pert - oracle| / |oracle| over the (inphase, quadrature) pair.
double lockin_relative_error(const LockinPair& perturbative, const LockinPair& oracle);

std::vector<CheckResult> run_verification(const PointSolver& solver = [](const SystemParams& p, double b0) {
  return signal_point<double>(p, b0);
});

/// Fixed-width pass/fail table.
std::string format_checks(const std::vector<CheckResult>& checks);

}  // namespace hanle
