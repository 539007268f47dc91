#include "hanle/oracle.hpp"

namespace hanle {

long long samples_per_period(double modulation_freq, double dt_max) {
  if (!(modulation_freq > 0.0) || !(dt_max > 0.0)) {
    throw ArgumentError("modulation frequency and step bound must be positive");
  }
  const double period = 2.0 * std::numbers::pi / modulation_freq;
  return static_cast<long long>(std::ceil(period / dt_max - 1e-9));
}

Demodulated numeric_lockin(std::span<const double> samples, double dt, double t0, double modulation_freq,
                           int n_periods) {
  if (!(modulation_freq > 0.0) || !(dt > 0.0)) throw ArgumentError("lock-in needs delta > 0 and dt > 0");
  if (n_periods < 1) throw ArgumentError(fmt::format("n_periods must be >= 1 (got {})", n_periods));

  const double period = 2.0 * std::numbers::pi / modulation_freq;
  const double per_period = period / dt;
  const double rounded = std::round(per_period);
  if (rounded < 1.0 || std::abs(per_period - rounded) > 1e-6 * per_period) {
    throw ArgumentError(
        fmt::format("period {} is not an integer number of samples (dt = {}, ratio {})", period, dt, per_period));
  }
  const auto window = static_cast<std::size_t>(rounded) * static_cast<std::size_t>(n_periods);
  if (samples.size() < window + 1) {
    throw ArgumentError(fmt::format("series of {} samples does not cover {} periods", samples.size(), n_periods));
  }

  const std::size_t start = samples.size() - (window + 1);
  double in_sum = 0.0;
  double quad_sum = 0.0;
  for (std::size_t k = 0; k <= window; ++k) {
    const double weight = (k == 0 || k == window) ? 0.5 : 1.0;
    const double phase = modulation_freq * (t0 + static_cast<double>(start + k) * dt);
    const double v = samples[start + k];
    in_sum += weight * v * std::cos(phase);
    quad_sum += weight * v * std::sin(phase);
  }
  const double scale = 2.0 / static_cast<double>(window);
  return {scale * in_sum, scale * quad_sum};
}

}  // namespace hanle
