#pragma once

// Average over optical detuning Delta = -k v, emulating integration over
// velocity classes near the centre of the Doppler profile.

#include <span>
#include <vector>

#include "hanle/parametric.hpp"

namespace hanle {

enum class Quantity { Static, InPhase, Quadrature };

enum class DetuningWeighting { Uniform, Gaussian };

struct DetuningGrid {
  double min = -5.0;
  double max = 5.0;
  int n_points = 41;
  DetuningWeighting weighting = DetuningWeighting::Uniform;
  double gaussian_width = 5.0;  ///< 1/e^{1/2} half-width, Gaussian weighting only

  /// Throws ArgumentError unless min < max and n_points is odd and >= 3.
  void validate() const;
  std::vector<double> points() const;
  /// Trapezoid weights (times the Gaussian, if selected), normalized to sum 1.
  std::vector<double> weights() const;
};

/// sum_i w_i v_i.
double weighted_mean(std::span<const double> values, std::span<const double> weights);

double select(const SignalPoint& point, Quantity quantity);

/// Signal point at field b0 averaged over the detuning grid (p.detuning is ignored).
template <typename Scalar = double>
SignalPoint averaged_signal_point(const SystemParams& p, double b0, const DetuningGrid& grid) {
  grid.validate();
  const std::vector<double> deltas = grid.points();
  const std::vector<double> w = grid.weights();
  SignalPoint mean{b0, 0.0, 0.0, 0.0};
  SystemParams shifted = p;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    shifted.detuning = deltas[i];
    const SignalPoint s = signal_point<Scalar>(shifted, b0);
    mean.lambda_static += w[i] * s.lambda_static;
    mean.lambda_inphase += w[i] * s.lambda_inphase;
    mean.lambda_quadrature += w[i] * s.lambda_quadrature;
  }
  return mean;
}

/// Detuning-averaged value of one signal at the field p.b0.
template <typename Scalar = double>
double average_over_detuning(const SystemParams& p, double delta_min, double delta_max, int n_points,
                             Quantity quantity, DetuningWeighting weighting = DetuningWeighting::Uniform) {
  DetuningGrid grid{delta_min, delta_max, n_points, weighting};
  return select(averaged_signal_point<Scalar>(p, p.b0, grid), quantity);
}

/// scan_b0 with every point averaged over detuning.
template <typename Scalar = double>
std::vector<SignalPoint> scan_b0_averaged(const SystemParams& p, std::span<const double> b0_grid,
                                          const DetuningGrid& grid, int jobs = 1) {
  p.validate();
  p.require_relaxation();
  grid.validate();
  return parallel_map<SignalPoint>(b0_grid.size(), jobs, [&](std::size_t i) {
    return averaged_signal_point<Scalar>(p, b0_grid[i], grid);
  });
}

}  // namespace hanle
