#pragma once

#include <random>

#include "hanle/operators.hpp"
#include "hanle/presets.hpp"

namespace test {

inline hanle::CMatrix<double> random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  hanle::CMatrix<double> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {normal(rng), normal(rng)};
  return (a + a.adjoint()) / 2.0;
}

inline hanle::SystemParams vacuum(int fg, int fe) {
  return hanle::rb87_d1_preset(fg, fe, hanle::CellRegime::Vacuum).params;
}

inline hanle::SystemParams buffer(int fg, int fe) {
  return hanle::rb87_d1_preset(fg, fe, hanle::CellRegime::Buffer).params;
}

// A closed transition with no relaxation toward sigma_0. Any Fg -> Fe allowed
// by the selection rule, not only the 87Rb D1 lines.
inline hanle::SystemParams closed(int fg, int fe, double rabi, double detuning) {
  hanle::SystemParams p = vacuum(2, 1);
  p.state = hanle::AngularState::make(fg, fe, 0.5, 1.0 / 6.0);
  p.rabi = rabi;
  p.detuning = detuning;
  p.branching = 1.0;
  p.transit_rate = 0.0;
  p.collision_rate = 0.0;
  return p;
}

}  // namespace test
