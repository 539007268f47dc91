#include <random>

#include <doctest.h>

#include "hanle/errors.hpp"
#include "hanle/liouvillian.hpp"
#include "support.hpp"

using namespace hanle;

namespace {

CMatrix<double> apply_super(const Superoperator<double>& m, const CMatrix<double>& sigma) {
  return devectorize(m * vectorize(sigma), sigma.rows());
}

}  // namespace

TEST_CASE("vectorization and multiplication superoperators") {
  std::mt19937_64 rng(11);
  const CMatrix<double> x = test::random_hermitian(5, rng) + CMatrix<double>::Identity(5, 5) * std::complex(0.0, 0.3);
  const CMatrix<double> s = test::random_hermitian(5, rng);
  CHECK(vectorize(s)(1 * 5 + 3) == s(1, 3));
  CHECK((devectorize(vectorize(s), 5) - s).norm() == 0.0);
  CHECK((apply_super(left_multiplication<double>(x), s) - x * s).norm() < 1e-12);
  CHECK((apply_super(right_multiplication<double>(x), s) - s * x).norm() < 1e-12);
}

TEST_CASE("both 87Rb model transitions give 64 x 64 superoperators") {
  for (auto [fg, fe] : {std::pair{2, 1}, std::pair{1, 2}}) {
    const auto m = build_superoperator<double>(test::vacuum(fg, fe), 0.01);
    CHECK(m.rows() == 64);
    CHECK(m.cols() == 64);
  }
}

TEST_CASE("isotropic ground state is stationary without light or field") {
  SystemParams p = test::vacuum(1, 2);
  p.rabi = 0.0;
  const CVector<double> y0 = vectorize(isotropic_ground_state<double>(p.state));
  const auto m = build_superoperator<double>(p, 0.0);
  CHECK((m * y0 + source_vector<double>(p)).cwiseAbs().maxCoeff() < 1e-15);
  p.transit_rate = 0.0;
  CHECK((build_superoperator<double>(p, 0.0) * y0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("closed transition without transit relaxation conserves the trace") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto [fg, fe] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{1, 1}, std::pair{2, 3}}) {
    for (double coll : {0.0, 4.0}) {
      SystemParams p = test::closed(fg, fe, 0.3 + std::abs(u(rng)), u(rng));
      p.collision_rate = coll;
      const auto m = build_superoperator<double>(p, 0.1 * u(rng));
      for (int k = 0; k < 10; ++k) {
        const CMatrix<double> s = test::random_hermitian(p.dim(), rng);
        CHECK(std::abs(apply_super(m, s).trace()) < 1e-12 * s.norm());
      }
    }
  }
}

TEST_CASE("the generator preserves Hermiticity (100 random matrices)") {
  std::mt19937_64 rng(2024);
  SystemParams p = test::buffer(1, 2);
  p.detuning = 0.7;
  p.rabi = 0.4;
  const auto m = build_superoperator<double>(p, 0.03);
  for (int k = 0; k < 100; ++k) {
    const CMatrix<double> s = test::random_hermitian(p.dim(), rng);
    CHECK(anti_hermitian_norm(apply_super(m, s)) < 1e-12 * s.norm());
  }
}

TEST_CASE("the superoperator is affine in the field") {
  const SystemParams p = test::vacuum(2, 1);
  const auto m0 = build_superoperator<double>(p, 0.0);
  const auto m1 = build_superoperator<double>(p, 1.0);
  for (double b : {-0.05, 0.003, 0.2}) {
    CHECK((build_superoperator<double>(p, b) - m0 - b * (m1 - m0)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Zeeman precession sign: H_B = -M_z B") {
  SystemParams p = test::vacuum(2, 1);
  p.rabi = 0.0;
  const double b = 0.02;
  const auto m = build_superoperator<double>(p, b);
  const auto z = zeeman_diagonal<double>(p.state);
  const Eigen::Index n = p.dim();
  // Ground coherence (0, 4): d/dt sigma_04 = (i B (z0 - z4) - gamma) sigma_04.
  const std::complex<double> expected(-p.transit_rate, b * (z(0) - z(4)));
  CHECK(std::abs(m(0 * n + 4, 0 * n + 4) - expected) < 1e-15);
}

TEST_CASE("spherical dot product convention") {
  // For x polarization, e.Q on the ground-excited block is (Q^{-1} - Q^{+1}) / sqrt(2).
  const AngularState s = test::vacuum(2, 1).state;
  const DipoleComponents d = dipole_components(s);
  const CMatrix<double> v = raising_coupling<double>(s, d, linear_polarization_x());
  const CMatrix<double> expected =
      embed_ground_excited<double>(s, (d.ge(-1) - d.ge(1)) / std::sqrt(2.0));
  CHECK((v - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("no eigenvalue of M has positive real part") {
  for (const SystemParams& base : {test::vacuum(2, 1), test::vacuum(1, 2), test::buffer(1, 2), test::buffer(2, 1)}) {
    for (double b : {0.0, 0.004, 0.05}) {
      SystemParams p = base;
      p.detuning = 0.5;
      Eigen::ComplexEigenSolver<CMatrix<double>> es(build_superoperator<double>(p, b), false);
      CHECK(es.eigenvalues().real().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("source vector") {
  SystemParams p = test::vacuum(1, 2);
  p.transit_rate = 1e-3;
  const CVector<double> v = source_vector<double>(p);
  const Eigen::Index n = p.dim();
  CHECK(v.size() == n * n);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(v(i * n + i).real() == doctest::Approx(1e-3 / 3.0).epsilon(1e-15));
  CHECK(v.sum().real() == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK(v.cwiseAbs().maxCoeff() == doctest::Approx(1e-3 / 3.0));
  for (Eigen::Index i = 3; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) CHECK(v(i * n + j) == std::complex<double>(0.0));
}

TEST_CASE("negative rates are rejected") {
  SystemParams p = test::vacuum(1, 2);
  p.transit_rate = -1e-3;
  CHECK_THROWS_AS(build_superoperator<double>(p, 0.0), ParameterError);
  p = test::vacuum(1, 2);
  p.branching = 1.5;
  CHECK_THROWS_AS(build_superoperator<double>(p, 0.0), ParameterError);
}

TEST_CASE("long double instantiation agrees with double") {
  const SystemParams p = test::vacuum(2, 1);
  const auto md = build_superoperator<double>(p, 0.01);
  const auto ml = build_superoperator<long double>(p, 0.01);
  CHECK((ml.cast<std::complex<double>>() - md).cwiseAbs().maxCoeff() < 1e-15);
}
