#pragma once

// First-order response to B = B0 + B1 cos(delta t).
//
// With sigma = sigma^0 + sigma^1(t) the first-order part obeys
//   dY/dt = M Y + A cos(delta t),   A = vec(i [M_z B1, sigma^0]).
// Inserting Y = alpha cos(delta t) + beta sin(delta t) and matching terms gives
//   delta beta = M alpha + A,   -delta alpha = M beta,
// whose solution is
//   alpha = -M (delta^2 + M^2)^{-1} A,   beta = delta (delta^2 + M^2)^{-1} A.
// The minus sign on alpha is the convention that agrees with direct time
// integration (see oracle.hpp).
//
// Lock-in channels use sin(delta t) as the reference: the in-phase signal is
// the absorption carried by beta and the quadrature signal the absorption
// carried by alpha. With this reference the central coherence resonance shows
// up in-phase, while the sidebands at 2 g B0 = delta and the non-resonant
// linear background show up in quadrature.

#include <span>
#include <vector>

#include <fmt/format.h>

#include "hanle/errors.hpp"
#include "hanle/liouvillian.hpp"
#include "hanle/parallel.hpp"
#include "hanle/steady.hpp"

namespace hanle {

template <typename Scalar = double>
struct FirstOrderResponse {
  CVector<Scalar> alpha;  ///< cos(delta t) component
  CVector<Scalar> beta;   ///< sin(delta t) component
};

struct LockinPair {
  double inphase = 0.0;
  double quadrature = 0.0;
};

/// Maps the cos(delta t) / sin(delta t) amplitudes of a signal onto lock-in channels.
inline LockinPair lockin_from_components(double cosine, double sine) { return {sine, cosine}; }

/// One point of a field scan.
struct SignalPoint {
  double b0 = 0.0;
  double lambda_static = 0.0;
  double lambda_inphase = 0.0;
  double lambda_quadrature = 0.0;
};

/// A = vec(i [M_z B1, sigma^0]).
template <typename Scalar = double>
CVector<Scalar> drive_vector(const DensityMatrix<Scalar>& sigma0, const AngularState& state, double b1) {
  const auto z = zeeman_diagonal<Scalar>(state);
  const Eigen::Index n = sigma0.rows();
  const std::complex<Scalar> i_b1(0, static_cast<Scalar>(b1));
  CMatrix<Scalar> commutator(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) commutator(r, c) = i_b1 * (z(r) - z(c)) * sigma0(r, c);
  return vectorize(commutator);
}

/// Cosine/sine amplitudes of the periodic first-order solution. At delta = 0
/// the static response alpha = -M^{-1} A is returned with beta exactly zero.
template <typename Scalar = double>
FirstOrderResponse<Scalar> alpha_beta(const Superoperator<Scalar>& m, const CVector<Scalar>& drive,
                                      double modulation_freq) {
  FirstOrderResponse<Scalar> out;
  if (modulation_freq == 0.0) {
    const auto lu = detail::factorize_checked<Scalar>(m, "superoperator");
    out.alpha = -lu.solve(drive);
    out.beta = CVector<Scalar>::Zero(drive.size());
    return out;
  }
  const Scalar delta = static_cast<Scalar>(modulation_freq);
  CMatrix<Scalar> system = m * m;
  system.diagonal().array() += delta * delta;
  const auto lu = detail::factorize_checked<Scalar>(system, "delta^2 + M^2");
  const CVector<Scalar> w = lu.solve(drive);
  out.alpha = -(m * w);
  out.beta = delta * w;
  return out;
}

/// Absorption carried by the alpha and beta density matrices, as lock-in channels.
template <typename Scalar = double>
LockinPair lockin_signals(const FirstOrderResponse<Scalar>& response, const CMatrix<Scalar>& probe) {
  const Eigen::Index n = probe.rows();
  return lockin_from_components(static_cast<double>(absorption<Scalar>(devectorize(response.alpha, n), probe)),
                                static_cast<double>(absorption<Scalar>(devectorize(response.beta, n), probe)));
}

/// Full pipeline at one static field: steady state, static absorption, and
/// the first-order lock-in signals.
template <typename Scalar = double>
SignalPoint signal_point(const SystemParams& p, double b0) {
  p.validate();
  p.require_relaxation();
  try {
    const Superoperator<Scalar> m = build_superoperator<Scalar>(p, b0);
    const DensityMatrix<Scalar> sigma0 = steady_state<Scalar>(m, source_vector<Scalar>(p));
    const CMatrix<Scalar> probe = probe_operator<Scalar>(p.state, p.polarization);
    const auto response = alpha_beta<Scalar>(m, drive_vector<Scalar>(sigma0, p.state, p.b1), p.modulation_freq);
    const LockinPair lockin = lockin_signals<Scalar>(response, probe);
    return {b0, static_cast<double>(absorption<Scalar>(sigma0, probe)), lockin.inphase, lockin.quadrature};
  } catch (const SolverError& e) {
    throw SolverError(fmt::format("B0 = {}, detuning = {}: {}", b0, p.detuning, e.what()));
  }
}

/// Evaluates signal_point over a B0 grid; output is in grid order for any `jobs`.
template <typename Scalar = double>
std::vector<SignalPoint> scan_b0(const SystemParams& p, std::span<const double> b0_grid, int jobs = 1) {
  p.validate();
  p.require_relaxation();
  return parallel_map<SignalPoint>(b0_grid.size(), jobs,
                                   [&](std::size_t i) { return signal_point<Scalar>(p, b0_grid[i]); });
}

/// Uniform grid of `count` points including both ends.
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace hanle
