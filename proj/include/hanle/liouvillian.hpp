#pragma once

// Superoperator M of the optical Bloch equations,
//
//   d/dt sigma = -i [Delta P_e - B M_z + V, sigma] - (1 + gamma_coll)/2 {P_e, sigma}
//                + b sum_q Q_ge^q sigma Q_eg^q - gamma sigma + gamma sigma_0
//                + gamma_coll P_e/(2Fe+1) Tr(P_e sigma),
//
// with V = (Omega/2) e.Q and e.Q = sum_q (-1)^q c_q Q^{-q}. M holds every
// sigma-linear term; the constant gamma*sigma_0 is the source vector. Under
// row-major vectorization, X sigma -> (X (x) 1) vec(sigma) and
// sigma X -> (1 (x) X^T) vec(sigma).

#include "hanle/operators.hpp"

namespace hanle {

/// A (x) B for square operands.
template <typename Scalar>
CMatrix<Scalar> kron(const CMatrix<Scalar>& a, const CMatrix<Scalar>& b) {
  const Eigen::Index na = a.rows(), nb = b.rows();
  CMatrix<Scalar> out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index k = 0; k < na; ++k) out.block(i * nb, k * nb, nb, nb) = a(i, k) * b;
  return out;
}

/// Superoperator of sigma -> X sigma.
template <typename Scalar>
CMatrix<Scalar> left_multiplication(const CMatrix<Scalar>& x) {
  return kron<Scalar>(x, CMatrix<Scalar>::Identity(x.rows(), x.rows()));
}

/// Superoperator of sigma -> sigma X.
template <typename Scalar>
CMatrix<Scalar> right_multiplication(const CMatrix<Scalar>& x) {
  return kron<Scalar>(CMatrix<Scalar>::Identity(x.rows(), x.rows()), x.transpose());
}

/// Superoperator of sigma -> -i [H, sigma].
template <typename Scalar>
CMatrix<Scalar> commutator_superoperator(const CMatrix<Scalar>& h) {
  const std::complex<Scalar> minus_i(0, -1);
  return minus_i * (left_multiplication<Scalar>(h) - right_multiplication<Scalar>(h));
}

/// Builds M at longitudinal field `field` (Larmor units). transit_rate = 0 is
/// allowed so closed-system properties can be probed; negative rates throw.
template <typename Scalar = double>
Superoperator<Scalar> build_superoperator(const SystemParams& p, double field) {
  p.validate();
  const AngularState& s = p.state;
  const Eigen::Index n = s.dim();
  const Eigen::Index dg = s.ground_dim();
  const Eigen::Index de = s.excited_dim();
  const DipoleComponents dipoles = dipole_components(s);

  CMatrix<Scalar> h = optical_hamiltonian<Scalar>(p, dipoles);
  const auto zeeman = zeeman_diagonal<Scalar>(s);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) -= static_cast<Scalar>(field) * zeeman(i);

  Superoperator<Scalar> m = commutator_superoperator<Scalar>(h);

  const CMatrix<Scalar> pe = excited_projector<Scalar>(s);
  m -= static_cast<Scalar>((1.0 + p.collision_rate) / 2) *
       (left_multiplication<Scalar>(pe) + right_multiplication<Scalar>(pe));

  if (p.branching != 0.0) {
    for (int q = -1; q <= 1; ++q) {
      const CMatrix<Scalar> q_ge = embed_ground_excited<Scalar>(s, dipoles.ge(q));
      m += static_cast<Scalar>(p.branching) * kron<Scalar>(q_ge, q_ge.conjugate());
    }
  }

  m.diagonal().array() -= static_cast<Scalar>(p.transit_rate);

  if (p.collision_rate != 0.0) {
    const Scalar repump = static_cast<Scalar>(p.collision_rate) / static_cast<Scalar>(de);
    for (Eigen::Index a = dg; a < n; ++a)
      for (Eigen::Index b = dg; b < n; ++b) m(a * n + a, b * n + b) += repump;
  }
  return m;
}

/// vec(gamma * sigma_0): gamma/(2Fg+1) on each ground population slot.
template <typename Scalar = double>
CVector<Scalar> source_vector(const SystemParams& p) {
  p.validate();
  const Eigen::Index n = p.dim();
  CVector<Scalar> v = CVector<Scalar>::Zero(n * n);
  const Scalar entry = static_cast<Scalar>(p.transit_rate) / static_cast<Scalar>(p.state.ground_dim());
  for (Eigen::Index i = 0; i < p.state.ground_dim(); ++i) v(i * n + i) = entry;
  return v;
}

}  // namespace hanle
