#pragma once

#include <cmath>

#include <fmt/format.h>

#include "hanle/errors.hpp"
#include "hanle/liouvillian.hpp"
#include "hanle/operators.hpp"

namespace hanle {

/// Largest accepted 1/rcond for the dense solves.
inline constexpr double kMaxConditionEstimate = 1e12;
/// Largest accepted anti-Hermitian part of a solved density matrix.
inline constexpr double kMaxHermitizationCorrection = 1e-9;

namespace detail {

template <typename Scalar>
Eigen::PartialPivLU<CMatrix<Scalar>> factorize_checked(const CMatrix<Scalar>& a, const char* what) {
  Eigen::PartialPivLU<CMatrix<Scalar>> lu(a);
  const double rcond = static_cast<double>(lu.rcond());
  if (!(rcond * kMaxConditionEstimate >= 1.0)) {
    throw SolverError(fmt::format("{} is singular or ill-conditioned (condition estimate {:.3e})", what,
                                  rcond > 0.0 ? 1.0 / rcond : INFINITY));
  }
  return lu;
}

}  // namespace detail

/// Solves M vec(sigma) + source = 0 by partial-pivot LU and Hermitizes the
/// result. Throws SolverError when M is ill-conditioned or the solution is not
/// Hermitian to kMaxHermitizationCorrection.
template <typename Scalar = double>
DensityMatrix<Scalar> steady_state(const Superoperator<Scalar>& m, const CVector<Scalar>& source) {
  const auto lu = detail::factorize_checked<Scalar>(m, "steady-state superoperator");
  const CVector<Scalar> y = lu.solve(-source);
  const Eigen::Index n = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(y.size()))));
  DensityMatrix<Scalar> sigma = devectorize(y, n);
  const double correction = static_cast<double>(anti_hermitian_norm(sigma));
  if (!(correction < kMaxHermitizationCorrection)) {
    throw SolverError(fmt::format("steady state is not Hermitian (anti-Hermitian part {:.3e})", correction));
  }
  return (sigma + sigma.adjoint()) / Scalar(2);
}

/// Steady state at field `field`; solver failures are re-thrown with the
/// offending parameters in the message.
template <typename Scalar = double>
DensityMatrix<Scalar> steady_state(const SystemParams& p, double field) {
  p.require_relaxation();
  try {
    return steady_state<Scalar>(build_superoperator<Scalar>(p, field), source_vector<Scalar>(p));
  } catch (const SolverError& e) {
    throw SolverError(fmt::format("{} [B={} {}]", e.what(), field, p.describe()));
  }
}

/// lambda = Im Tr(sigma P_e (e.Q) P_g), positive for absorption. The overall
/// scale (reduced dipole element, density, path length) is arbitrary.
template <typename Scalar = double>
Scalar absorption(const DensityMatrix<Scalar>& sigma, const CMatrix<Scalar>& probe) {
  return (sigma.array() * probe.transpose().array()).sum().imag();
}

template <typename Scalar = double>
Scalar absorption(const DensityMatrix<Scalar>& sigma, const AngularState& state, const Polarization& pol) {
  return absorption<Scalar>(sigma, probe_operator<Scalar>(state, pol));
}

}  // namespace hanle
