#include "hanle/doppler.hpp"

#include <cmath>
#include <numeric>

namespace hanle {

void DetuningGrid::validate() const {
  if (!(min < max)) throw ArgumentError(fmt::format("detuning range needs min < max (got {}, {})", min, max));
  if (n_points < 3 || n_points % 2 == 0) {
    throw ArgumentError(fmt::format("detuning grid needs an odd number of points >= 3 (got {})", n_points));
  }
  if (weighting == DetuningWeighting::Gaussian && !(gaussian_width > 0.0)) {
    throw ArgumentError("gaussian_width must be > 0");
  }
}

std::vector<double> DetuningGrid::points() const {
  validate();
  return linspace(min, max, n_points);
}

std::vector<double> DetuningGrid::weights() const {
  const std::vector<double> x = points();
  std::vector<double> w(x.size(), 1.0);
  w.front() = w.back() = 0.5;
  if (weighting == DetuningWeighting::Gaussian) {
    for (std::size_t i = 0; i < x.size(); ++i) w[i] *= std::exp(-0.5 * x[i] * x[i] / (gaussian_width * gaussian_width));
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= total;
  return w;
}

double weighted_mean(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size()) throw ArgumentError("values and weights differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += weights[i] * values[i];
  return sum;
}

double select(const SignalPoint& point, Quantity quantity) {
  switch (quantity) {
    case Quantity::Static:
      return point.lambda_static;
    case Quantity::InPhase:
      return point.lambda_inphase;
    case Quantity::Quadrature:
      return point.lambda_quadrature;
  }
  return 0.0;
}

}  // namespace hanle
