#include <cmath>

#include <doctest.h>

#include "hanle/angular.hpp"
#include "hanle/errors.hpp"
#include "racah_oracle.hpp"

using namespace hanle;

TEST_CASE("3-j examples") {
  CHECK(wigner3j(1, 1, 0, 0, 0, 0) == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(wigner3j(1, 1, 1, 0, 0, 0) == 0.0);
  CHECK(wigner3j(1, 2, 1, 1, 0, 0) == 0.0);
  CHECK(wigner3j(0.5, 0.5, 1, 0.5, -0.5, 0) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
}

TEST_CASE("6-j examples") {
  CHECK(wigner6j(1, 1, 1, 1, 1, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(wigner6j(1, 1, 0, 1, 1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(wigner6j(1, 1, 3, 1, 1, 1) == 0.0);
}

TEST_CASE("Clebsch-Gordan examples") {
  CHECK(clebsch_gordan(1, 0, 1, 0, 2, 0) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(clebsch_gordan(1, 1, 1, 0, 2, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(std::abs(clebsch_gordan(1, 0, 1, 0, 1, 0)) < 1e-15);
  // Spin-1/2 pair into the triplet and singlet.
  CHECK(clebsch_gordan(0.5, 0.5, 0.5, -0.5, 1, 0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(clebsch_gordan(0.5, 0.5, 0.5, -0.5, 0, 0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(clebsch_gordan(0.5, -0.5, 0.5, 0.5, 0, 0) == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("bad quantum numbers throw") {
  CHECK_THROWS_AS(wigner3j(1.3, 1, 1, 0, 0, 0), ArgumentError);
  CHECK_THROWS_AS(wigner3j(1, 1, 1, 2, -2, 0), ArgumentError);    // |m| > j
  CHECK_THROWS_AS(wigner3j(1, 1, 1, 0.5, -0.5, 0), ArgumentError);  // j, m parity mismatch
  CHECK_THROWS_AS(wigner6j(1, 1, 1, 1, 1, 0.25), ArgumentError);
  CHECK_THROWS_AS(HalfInteger::from_double(0.3), ArgumentError);
  CHECK_THROWS_AS(wigner3j(21, 21, 0, 0, 0, 0), ArgumentError);  // beyond kMaxTwiceJ
}

TEST_CASE("3-j symbols for j <= 4 match the exact Racah sum") {
  int compared = 0;
  double worst = 0.0;
  for (int j1 = 0; j1 <= 8; ++j1)
    for (int j2 = 0; j2 <= 8; ++j2)
      for (int j3 = 0; j3 <= 8; ++j3)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3 || (j3 + m3) % 2 != 0) continue;
            const double expected = static_cast<double>(racah_oracle::wigner3j(j1, j2, j3, m1, m2, m3).value());
            worst = std::max(worst, std::abs(wigner3j_twice(j1, j2, j3, m1, m2, m3) - expected));
            ++compared;
          }
  CHECK(compared == 5339);
  CHECK(worst < 1e-12);
}

TEST_CASE("6-j symbols for j <= 4 match the exact Racah sum") {
  int nonzero = 0;
  double worst = 0.0;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 8; ++c) {
        if (!racah_oracle::triangle(a, b, c)) continue;
        for (int d = 0; d <= 8; ++d)
          for (int e = 0; e <= 8; ++e)
            for (int f = 0; f <= 8; ++f) {
              const auto exact = racah_oracle::wigner6j(a, b, c, d, e, f);
              if (exact.coefficient != 0) ++nonzero;
              worst = std::max(worst, std::abs(wigner6j_twice(a, b, c, d, e, f) -
                                               static_cast<double>(exact.value())));
            }
      }
  CHECK(nonzero > 1000);
  CHECK(worst < 1e-12);
}

TEST_CASE("3-j permutation symmetry and orthogonality") {
  for (int j1 = 0; j1 <= 6; ++j1)
    for (int j2 = 0; j2 <= 6; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            const double w = wigner3j_twice(j1, j2, j3, m1, m2, m3);
            const double odd = ((j1 + j2 + j3) / 2) % 2 == 0 ? 1.0 : -1.0;
            CHECK(wigner3j_twice(j2, j3, j1, m2, m3, m1) == doctest::Approx(w).epsilon(1e-13));
            CHECK(wigner3j_twice(j3, j1, j2, m3, m1, m2) == doctest::Approx(w).epsilon(1e-13));
            CHECK(wigner3j_twice(j2, j1, j3, m2, m1, m3) == doctest::Approx(odd * w).epsilon(1e-13));
            CHECK(wigner3j_twice(j1, j2, j3, -m1, -m2, -m3) == doctest::Approx(odd * w).epsilon(1e-13));
          }

  for (int j1 = 0; j1 <= 8; ++j1)
    for (int j2 = 0; j2 <= 8; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2 && j3 <= 8; j3 += 2)
        for (int m3 = -j3; m3 <= j3; m3 += 2) {
          double sum = 0.0;
          for (int m1 = -j1; m1 <= j1; m1 += 2) {
            const int m2 = -m1 - m3;
            if (std::abs(m2) > j2) continue;
            const double w = wigner3j_twice(j1, j2, j3, m1, m2, m3);
            sum += (j3 + 1) * w * w;
          }
          CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("AngularState invariants") {
  const AngularState s = AngularState::make(2, 1, 0.5, 1.0 / 6.0);
  CHECK(s.ground_dim() == 5);
  CHECK(s.excited_dim() == 3);
  CHECK(s.dim() == 8);
  CHECK(s.mg(0) == -2.0);
  CHECK(s.me(2) == 1.0);
  CHECK(AngularState::make(1, 2, -0.5, 1.0 / 6.0).dim() == 8);
  CHECK_THROWS_AS(AngularState::make(0, 0, 1, 1), ArgumentError);
  CHECK_THROWS_AS(AngularState::make(1, 3, 1, 1), ArgumentError);
  CHECK_THROWS_AS(AngularState::make(1, 1.5, 1, 1), ArgumentError);
  CHECK_THROWS_AS(AngularState::make(-1, 0, 1, 1), ArgumentError);
}

TEST_CASE("dipole components: completeness and selection rule for every small transition") {
  for (int tfg = 0; tfg <= 8; ++tfg)
    for (int tfe = tfg - 2; tfe <= tfg + 2; tfe += 2) {
      if (tfe < 0 || (tfg == 0 && tfe == 0)) continue;
      const AngularState s = AngularState::make(tfg / 2.0, tfe / 2.0, 1.0, 1.0);
      CAPTURE(tfg);
      CAPTURE(tfe);
      const DipoleComponents d = dipole_components(s);
      Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(s.excited_dim(), s.excited_dim());
      for (int q = -1; q <= 1; ++q) {
        sum += d.eg(q) * d.ge(q);
        for (int g = 0; g < s.ground_dim(); ++g)
          for (int e = 0; e < s.excited_dim(); ++e)
            if (std::abs(s.mg(g) - (s.me(e) + q)) > 1e-12) CHECK(d.ge(q)(g, e) == 0.0);
      }
      CHECK((sum - Eigen::MatrixXd::Identity(s.excited_dim(), s.excited_dim())).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("Fg=1 -> Fe=2: the m=0 sublevel couples most strongly") {
  const AngularState s = AngularState::make(1, 2, -0.5, 1.0 / 6.0);
  const DipoleComponents d = dipole_components(s);
  const auto& q0 = d.ge(0);
  // rows mg = -1, 0, 1; columns me = -2..2
  CHECK(std::abs(q0(1, 2)) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(std::abs(q0(0, 1)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(std::abs(q0(2, 3)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("Fg=1 -> Fe=0: pi coupling only between the m=0 states") {
  const AngularState s = AngularState::make(1, 0, 1, 0);
  const DipoleComponents d = dipole_components(s);
  const auto& q0 = d.ge(0);
  CHECK(q0.rows() == 3);
  CHECK(q0.cols() == 1);
  CHECK(q0(0, 0) == 0.0);
  CHECK(q0(1, 0) != 0.0);
  CHECK(q0(2, 0) == 0.0);
}

TEST_CASE("Zeeman operator") {
  const AngularState s = AngularState::make(1, 2, -0.5, 1.0 / 6.0);
  const Eigen::VectorXd z = zeeman_operator(s).diagonal();
  CHECK(z(0) == doctest::Approx(0.5));
  CHECK(z(1) == 0.0);
  CHECK(z(2) == doctest::Approx(-0.5));
  CHECK(z(3) == doctest::Approx(-2.0 / 6.0));
  CHECK(std::abs(z.sum()) < 1e-15);
}

TEST_CASE("branching ratios") {
  CHECK(branching_ratio(0.5, 0.5, 1.5, 1, 2) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
  CHECK(branching_ratio(0.5, 0.5, 1.5, 2, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(racah_oracle::branching_ratio(1, 1, 3, 2, 4) == racah_oracle::cpp_rational(5, 6));
  CHECK(racah_oracle::branching_ratio(1, 1, 3, 4, 2) == racah_oracle::cpp_rational(1, 2));
  CHECK(branching_ratio(0.5, 0.5, 1.5, 1, 3) == 0.0);  // not dipole connected

  // Sum over reachable Fg is 1 for every (Je, Jg, I, Fe).
  for (int tje = 1; tje <= 5; tje += 2)
    for (int tjg = 1; tjg <= 5; tjg += 2) {
      if (std::abs(tje - tjg) > 2) continue;
      for (int ti = 0; ti <= 7; ++ti) {
        if ((ti + tje) % 2 != (ti + tjg) % 2) continue;
        for (int tfe = std::abs(tje - ti); tfe <= tje + ti; tfe += 2) {
          double sum = 0.0;
          for (int tfg = std::abs(tjg - ti); tfg <= tjg + ti; tfg += 2) {
            const double b = branching_ratio(tje / 2.0, tjg / 2.0, ti / 2.0, tfe / 2.0, tfg / 2.0);
            CHECK(b == doctest::Approx(static_cast<double>(racah_oracle::branching_ratio(tje, tjg, ti, tfe, tfg)))
                           .epsilon(1e-13));
            sum += b;
          }
          CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
      }
    }
}

TEST_CASE("polarization") {
  const Polarization x = linear_polarization_x();
  CHECK(x.component(0) == std::complex<double>(0.0));
  CHECK(std::norm(x.component(-1)) == doctest::Approx(0.5));
  CHECK(std::norm(x.component(1)) == doctest::Approx(0.5));
  CHECK(x.component(-1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(x.component(1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(linear_polarization_z().component(0) == std::complex<double>(1.0));
  CHECK_THROWS_AS(Polarization({1.0, 1.0, 0.0}), ArgumentError);
}
