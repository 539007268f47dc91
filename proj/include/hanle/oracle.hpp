#pragma once

// Direct time-domain integration of the optical Bloch equations with the
// full modulated field B(t) = B0 + B1 cos(delta t), and a numeric lock-in.
// The right-hand side is evaluated on n x n matrices term by term; it does
// not use the superoperator assembly, so it serves as an independent check of
// liouvillian/steady/parametric.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include <fmt/format.h>

#include "hanle/errors.hpp"
#include "hanle/operators.hpp"
#include "hanle/parametric.hpp"

namespace hanle {

/// Right-hand side of the optical Bloch equations at time t.
template <typename Scalar = double>
class BlochEquations {
 public:
  explicit BlochEquations(const SystemParams& p)
      : p_(p),
        n_(p.dim()),
        dg_(p.state.ground_dim()),
        de_(p.state.excited_dim()),
        zeeman_(zeeman_diagonal<Scalar>(p.state)) {
    p_.validate();
    const DipoleComponents dipoles = dipole_components(p.state);
    h_optical_ = nonzeros(optical_hamiltonian<Scalar>(p, dipoles));
    for (int q = -1; q <= 1; ++q) {
      const Eigen::MatrixXd& block = dipoles.ge(q);
      for (Eigen::Index c = 0; c < block.cols(); ++c)
        for (Eigen::Index r = 0; r < block.rows(); ++r)
          if (block(r, c) != 0.0) feed_.push_back({r, c, static_cast<Scalar>(block(r, c)), q});
    }
    product_.resize(n_, n_);
  }

  double field(double t) const { return p_.b0 + p_.b1 * std::cos(p_.modulation_freq * t); }

  DensityMatrix<Scalar> operator()(double t, const DensityMatrix<Scalar>& sigma) const {
    DensityMatrix<Scalar> d(n_, n_);
    evaluate(t, sigma, d);
    return d;
  }

  /// Writes d sigma/dt into `d` without allocating.
  void evaluate(double t, const DensityMatrix<Scalar>& sigma, DensityMatrix<Scalar>& d) const {
    using C = std::complex<Scalar>;
    const Scalar b = static_cast<Scalar>(field(t));
    const Scalar excited_decay = static_cast<Scalar>((1.0 + p_.collision_rate) / 2);
    const Scalar gamma = static_cast<Scalar>(p_.transit_rate);

    // [H_opt, sigma]; H_opt has a handful of nonzeros (detuning diagonal and
    // the dipole couplings), so it is applied entry by entry.
    product_.setZero();
    for (const auto& h : h_optical_) {
      product_.row(h.row) += h.value * sigma.row(h.col);
      product_.col(h.col) -= sigma.col(h.row) * h.value;
    }

    // -i [H_opt, sigma] plus everything diagonal in the sublevel basis:
    //   -i [-B M_z, sigma] = i B (z_r - z_c) sigma_rc
    //   -(Gamma + gamma_coll)/2 {P_e, sigma} - gamma sigma
    // written with real arithmetic (complex operator* is a library call).
    for (Eigen::Index c = 0; c < n_; ++c) {
      for (Eigen::Index r = 0; r < n_; ++r) {
        const int excited_count = (r >= dg_) + (c >= dg_);
        const Scalar decay = -excited_decay * Scalar(excited_count) - gamma;
        const Scalar precession = b * (zeeman_(r) - zeeman_(c));
        const C s = sigma(r, c);
        const C hs = product_(r, c);
        d(r, c) = C(hs.imag() + decay * s.real() - precession * s.imag(),
                    -hs.real() + decay * s.imag() + precession * s.real());
      }
    }

    // b Gamma sum_q Q_ge^q sigma_ee Q_eg^q lands in the ground block (Q is real).
    if (p_.branching != 0.0) {
      const Scalar branching = static_cast<Scalar>(p_.branching);
      for (const auto& x : feed_) {
        for (const auto& y : feed_) {
          if (x.q != y.q) continue;
          d(x.row, y.row) += (branching * x.value * y.value) * sigma(dg_ + x.col, dg_ + y.col);
        }
      }
    }

    // gamma sigma_0
    for (Eigen::Index i = 0; i < dg_; ++i) d(i, i) += gamma / Scalar(dg_);

    if (p_.collision_rate != 0.0) {
      const C excited_population = sigma.bottomRightCorner(de_, de_).trace();
      const C repump = static_cast<Scalar>(p_.collision_rate) * excited_population / Scalar(de_);
      for (Eigen::Index i = dg_; i < n_; ++i) d(i, i) += repump;
    }
  }

  /// Largest rate in the problem, used for the step-size rule.
  double fastest_rate() const {
    return std::max({1.0, p_.rabi, std::abs(p_.detuning), std::abs(p_.b0) + std::abs(p_.b1),
                     std::abs(p_.modulation_freq)});
  }

 private:
  struct Entry {
    Eigen::Index row, col;
    std::complex<Scalar> value;
  };
  struct FeedEntry {
    Eigen::Index row, col;
    Scalar value;
    int q;
  };

  static std::vector<Entry> nonzeros(const CMatrix<Scalar>& m) {
    std::vector<Entry> out;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        if (m(r, c) != std::complex<Scalar>(0)) out.push_back({r, c, m(r, c)});
    return out;
  }

  SystemParams p_;
  Eigen::Index n_, dg_, de_;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> zeeman_;
  std::vector<Entry> h_optical_;
  std::vector<FeedEntry> feed_;
  mutable CMatrix<Scalar> product_;
};

/// Step-size bound: dt <= kStepFraction / (fastest rate).
inline constexpr double kStepFraction = 0.05;

/// Classical fixed-step RK4 from t = 0 to t_end. `observer(t, sigma)` is called
/// for the initial state and after every step. Throws ArgumentError if dt
/// violates the step-size rule and IntegrationError on non-finite values.
template <typename Scalar = double, typename Observer>
DensityMatrix<Scalar> integrate(const SystemParams& p, DensityMatrix<Scalar> sigma, double t_end, double dt,
                                Observer&& observer) {
  const BlochEquations<Scalar> rhs(p);
  const double dt_max = kStepFraction / rhs.fastest_rate();
  if (!(dt > 0.0) || dt > dt_max * (1.0 + 1e-12)) {
    throw ArgumentError(fmt::format("time step {} outside (0, {}]", dt, dt_max));
  }
  if (!(t_end >= 0.0)) throw ArgumentError(fmt::format("t_end must be >= 0 (got {})", t_end));
  if (sigma.rows() != p.dim() || sigma.cols() != p.dim()) {
    throw ArgumentError(fmt::format("initial state must be {}x{}", p.dim(), p.dim()));
  }

  const auto steps = static_cast<long long>(std::llround(std::ceil(t_end / dt - 1e-9)));
  const Scalar h = static_cast<Scalar>(dt);
  const Eigen::Index n = sigma.rows();
  DensityMatrix<Scalar> k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n);
  observer(0.0, sigma);
  for (long long k = 0; k < steps; ++k) {
    const double t = k * dt;
    rhs.evaluate(t, sigma, k1);
    stage = sigma + (h / 2) * k1;
    rhs.evaluate(t + dt / 2, stage, k2);
    stage = sigma + (h / 2) * k2;
    rhs.evaluate(t + dt / 2, stage, k3);
    stage = sigma + h * k3;
    rhs.evaluate(t + dt, stage, k4);
    sigma += (h / 6) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
    if (!sigma.allFinite()) {
      throw IntegrationError(fmt::format("non-finite density matrix at t = {} [{}]", (k + 1) * dt, p.describe()));
    }
    observer((k + 1) * dt, sigma);
  }
  return sigma;
}

template <typename Scalar = double>
struct TimeSeries {
  std::vector<double> times;
  std::vector<DensityMatrix<Scalar>> states;
};

/// Stores every `stride`-th state (the initial state is always kept).
template <typename Scalar = double>
TimeSeries<Scalar> integrate(const SystemParams& p, const DensityMatrix<Scalar>& sigma_init, double t_end, double dt,
                             int stride = 1) {
  TimeSeries<Scalar> series;
  long long index = 0;
  const long long keep = std::max(stride, 1);
  integrate<Scalar>(p, sigma_init, t_end, dt, [&](double t, const DensityMatrix<Scalar>& s) {
    if (index++ % keep == 0) {
      series.times.push_back(t);
      series.states.push_back(s);
    }
  });
  return series;
}

/// Cosine and sine projections of a demodulated signal.
struct Demodulated {
  double cosine = 0.0;
  double sine = 0.0;
};

/// (2/T) * integral of lambda(t) {cos, sin}(delta t) over the last
/// `n_periods` full periods of a uniformly sampled series starting at t0
/// (trapezoidal rule). The period must be an integer number of samples.
Demodulated numeric_lockin(std::span<const double> samples, double dt, double t0, double modulation_freq,
                           int n_periods);

/// Samples per modulation period for a step no larger than dt_max.
long long samples_per_period(double modulation_freq, double dt_max);

struct OracleOptions {
  /// Discard this many 1/gamma before demodulating. At 5 the leftover
  /// first-order transient (e^-5) sits near 4e-4 relative and hides the
  /// B1^2 nonlinearity; at 10 it is below 1e-5.
  double transient_rates = 10.0;
  int n_periods = 2;
  /// Demodulate lambda_modulated(t) - lambda_unmodulated(t) from two
  /// trajectories with the same initial state, so the zeroth-order transient
  /// cancels exactly.
  bool subtract_unmodulated = true;
};

/// Integrates from the isotropic ground state and demodulates the absorption.
template <typename Scalar = double>
LockinPair oracle_lockin(const SystemParams& p, const OracleOptions& options = {}) {
  p.validate();
  p.require_relaxation();
  if (!(p.modulation_freq > 0.0)) throw ArgumentError("oracle lock-in needs modulation_freq > 0");
  if (options.n_periods < 1 || !(options.transient_rates >= 0.0)) throw ArgumentError("invalid oracle options");

  const double rate = BlochEquations<Scalar>(p).fastest_rate();
  const long long per_period = samples_per_period(p.modulation_freq, kStepFraction / rate);
  const double period = 2.0 * std::numbers::pi / p.modulation_freq;
  const double dt = period / static_cast<double>(per_period);

  const auto transient_periods =
      static_cast<long long>(std::ceil(options.transient_rates / p.transit_rate / period));
  const long long total_steps = (transient_periods + options.n_periods) * per_period;
  const long long first_kept = transient_periods * per_period;
  const CMatrix<Scalar> probe = probe_operator<Scalar>(p.state, p.polarization);

  auto absorption_series = [&](const SystemParams& run) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(total_steps - first_kept + 1));
    long long step = 0;
    integrate<Scalar>(run, isotropic_ground_state<Scalar>(run.state), total_steps * dt, dt,
                      [&](double, const DensityMatrix<Scalar>& s) {
                        if (step++ >= first_kept) samples.push_back(static_cast<double>(absorption<Scalar>(s, probe)));
                      });
    return samples;
  };

  std::vector<double> samples = absorption_series(p);
  if (options.subtract_unmodulated) {
    SystemParams reference = p;
    reference.b1 = 0.0;
    const std::vector<double> baseline = absorption_series(reference);
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] -= baseline[i];
  }
  const Demodulated d = numeric_lockin(samples, dt, first_kept * dt, p.modulation_freq, options.n_periods);
  return lockin_from_components(d.cosine, d.sine);
}

}  // namespace hanle
