#pragma once

// Dense operator types and the n x n building blocks of the optical Bloch
// equations, templated on the real scalar type.

#include <complex>

#include <Eigen/Dense>

#include "hanle/angular.hpp"
#include "hanle/params.hpp"

namespace hanle {

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// n x n, basis [g: -Fg..Fg, e: -Fe..Fe].
template <typename Scalar = double>
using DensityMatrix = CMatrix<Scalar>;

/// n^2 x n^2 map acting on row-major vectorized density matrices.
template <typename Scalar = double>
using Superoperator = CMatrix<Scalar>;

/// Row-major vectorization: sigma(i, j) -> Y[i*n + j].
template <typename Derived>
CVector<typename Derived::RealScalar> vectorize(const Eigen::MatrixBase<Derived>& sigma) {
  const Eigen::Index n = sigma.rows();
  CVector<typename Derived::RealScalar> y(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) y(i * n + j) = sigma(i, j);
  return y;
}

template <typename Derived>
CMatrix<typename Derived::RealScalar> devectorize(const Eigen::MatrixBase<Derived>& y, Eigen::Index n) {
  eigen_assert(y.size() == n * n);
  CMatrix<typename Derived::RealScalar> sigma(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) sigma(i, j) = y(i * n + j);
  return sigma;
}

/// max |X - X^dagger| / 2, the size of the anti-Hermitian part.
template <typename Derived>
typename Derived::RealScalar anti_hermitian_norm(const Eigen::MatrixBase<Derived>& x) {
  return (x - x.adjoint()).cwiseAbs().maxCoeff() / 2;
}

template <typename Scalar = double>
CMatrix<Scalar> excited_projector(const AngularState& state) {
  CMatrix<Scalar> p = CMatrix<Scalar>::Zero(state.dim(), state.dim());
  for (int i = state.ground_dim(); i < state.dim(); ++i) p(i, i) = Scalar(1);
  return p;
}

template <typename Scalar = double>
CMatrix<Scalar> ground_projector(const AngularState& state) {
  CMatrix<Scalar> p = CMatrix<Scalar>::Zero(state.dim(), state.dim());
  for (int i = 0; i < state.ground_dim(); ++i) p(i, i) = Scalar(1);
  return p;
}

/// sigma_0 = P_g / (2Fg + 1): isotropic ground state with unit population.
template <typename Scalar = double>
DensityMatrix<Scalar> isotropic_ground_state(const AngularState& state) {
  return ground_projector<Scalar>(state) / Scalar(state.ground_dim());
}

/// Q_ge^q placed in the (g, e) block of an n x n matrix.
template <typename Scalar = double>
CMatrix<Scalar> embed_ground_excited(const AngularState& state, const Eigen::MatrixXd& block) {
  CMatrix<Scalar> out = CMatrix<Scalar>::Zero(state.dim(), state.dim());
  out.block(0, state.ground_dim(), state.ground_dim(), state.excited_dim()) =
      block.cast<Scalar>().template cast<std::complex<Scalar>>();
  return out;
}

/// The (g, e) block of e.Q, i.e. sum_q (-1)^q c_q Q_ge^{-q}, embedded n x n.
template <typename Scalar = double>
CMatrix<Scalar> raising_coupling(const AngularState& state, const DipoleComponents& dipoles,
                                 const Polarization& pol) {
  CMatrix<Scalar> out = CMatrix<Scalar>::Zero(state.dim(), state.dim());
  for (int q = -1; q <= 1; ++q) {
    const std::complex<double> c = pol.component(q);
    if (c == 0.0) continue;
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    out += embed_ground_excited<Scalar>(state, dipoles.ge(-q)) *
           std::complex<Scalar>(static_cast<Scalar>(sign * c.real()), static_cast<Scalar>(sign * c.imag()));
  }
  return out;
}

/// Probe operator P_e (e.Q) P_g; absorption is Im Tr(sigma * probe).
template <typename Scalar = double>
CMatrix<Scalar> probe_operator(const AngularState& state, const Polarization& pol) {
  return raising_coupling<Scalar>(state, dipole_components(state), pol).adjoint();
}

/// Field-free part of the rotating-frame Hamiltonian, Delta P_e + (Omega/2) e.Q.
template <typename Scalar = double>
CMatrix<Scalar> optical_hamiltonian(const SystemParams& p, const DipoleComponents& dipoles) {
  const CMatrix<Scalar> v_ge = raising_coupling<Scalar>(p.state, dipoles, p.polarization);
  CMatrix<Scalar> h = (v_ge + v_ge.adjoint()) * std::complex<Scalar>(static_cast<Scalar>(p.rabi / 2));
  for (int i = p.state.ground_dim(); i < p.dim(); ++i) h(i, i) += static_cast<Scalar>(p.detuning);
  return h;
}

/// Diagonal of M_z/hbar in the working scalar type.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> zeeman_diagonal(const AngularState& state) {
  return zeeman_operator(state).diagonal().cast<Scalar>();
}

}  // namespace hanle
