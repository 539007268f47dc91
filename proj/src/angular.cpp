#include "hanle/angular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>

#include "hanle/errors.hpp"

namespace hanle {
namespace {

constexpr int kFactorialTableSize = 4 * kMaxTwiceJ / 2 + 2;

struct FactorialTable {
  std::array<long double, kFactorialTableSize> values{};
  constexpr FactorialTable() {
    values[0] = 1.0L;
    for (int i = 1; i < kFactorialTableSize; ++i) values[i] = values[i - 1] * i;
  }
};

constexpr FactorialTable kFactorials;

long double factorial(int n) {
  if (n < 0 || n >= kFactorialTableSize) {
    throw ArgumentError(fmt::format("factorial argument {} outside supported range", n));
  }
  return kFactorials.values[n];
}

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void check_j(int tj) {
  if (tj < 0) throw ArgumentError("angular momentum must be non-negative");
  if (tj > kMaxTwiceJ) {
    throw ArgumentError(fmt::format("j = {}/2 outside supported range (j <= {})", tj, kMaxTwiceJ / 2));
  }
}

void check_jm(int tj, int tm) {
  check_j(tj);
  if (std::abs(tm) > tj) throw ArgumentError("|m| exceeds j");
  if ((tj + tm) % 2 != 0) throw ArgumentError("j and m must differ by an integer");
}

// All three arguments are twice their value.
bool triangle(int ta, int tb, int tc) {
  return tc >= std::abs(ta - tb) && tc <= ta + tb && (ta + tb + tc) % 2 == 0;
}

// sqrt of (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
long double triangle_coefficient(int ta, int tb, int tc) {
  return std::sqrt(factorial((ta + tb - tc) / 2) * factorial((ta - tb + tc) / 2) *
                   factorial((-ta + tb + tc) / 2) / factorial((ta + tb + tc) / 2 + 1));
}

}  // namespace

HalfInteger HalfInteger::from_double(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9) {
    throw ArgumentError(fmt::format("{} is not a half-integer", value));
  }
  return from_twice(static_cast<int>(rounded));
}

double wigner3j_twice(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
  check_jm(tj1, tm1);
  check_jm(tj2, tm2);
  check_jm(tj3, tm3);
  if (tm1 + tm2 + tm3 != 0) return 0.0;
  if (!triangle(tj1, tj2, tj3)) return 0.0;

  // Everything below is in units of 1 (not twice); all combinations are integers.
  const int j1_plus_m1 = (tj1 + tm1) / 2, j1_minus_m1 = (tj1 - tm1) / 2;
  const int j2_plus_m2 = (tj2 + tm2) / 2, j2_minus_m2 = (tj2 - tm2) / 2;
  const int j3_plus_m3 = (tj3 + tm3) / 2, j3_minus_m3 = (tj3 - tm3) / 2;
  const int j1j2_j3 = (tj1 + tj2 - tj3) / 2;
  const int j3_j2_m1 = (tj3 - tj2 + tm1) / 2;
  const int j3_j1_m2 = (tj3 - tj1 - tm2) / 2;

  const int k_min = std::max({0, -j3_j2_m1, -j3_j1_m2});
  const int k_max = std::min({j1j2_j3, j1_minus_m1, j2_plus_m2});

  long double sum = 0.0L;
  for (int k = k_min; k <= k_max; ++k) {
    const long double denom = factorial(k) * factorial(j3_j2_m1 + k) * factorial(j3_j1_m2 + k) *
                              factorial(j1j2_j3 - k) * factorial(j1_minus_m1 - k) *
                              factorial(j2_plus_m2 - k);
    sum += parity_sign(k) / denom;
  }

  const long double prefactor =
      triangle_coefficient(tj1, tj2, tj3) *
      std::sqrt(factorial(j1_plus_m1) * factorial(j1_minus_m1) * factorial(j2_plus_m2) *
                factorial(j2_minus_m2) * factorial(j3_plus_m3) * factorial(j3_minus_m3));
  const int phase = parity_sign((tj1 - tj2 - tm3) / 2);
  return static_cast<double>(phase * prefactor * sum);
}

double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3) {
  return wigner3j_twice(HalfInteger::from_double(j1).twice(), HalfInteger::from_double(j2).twice(),
                        HalfInteger::from_double(j3).twice(), HalfInteger::from_double(m1).twice(),
                        HalfInteger::from_double(m2).twice(), HalfInteger::from_double(m3).twice());
}

double wigner6j_twice(int tj1, int tj2, int tj3, int tj4, int tj5, int tj6) {
  for (int tj : {tj1, tj2, tj3, tj4, tj5, tj6}) check_j(tj);
  if (!triangle(tj1, tj2, tj3) || !triangle(tj1, tj5, tj6) || !triangle(tj4, tj2, tj6) ||
      !triangle(tj4, tj5, tj3)) {
    return 0.0;
  }

  const int a1 = (tj1 + tj2 + tj3) / 2;
  const int a2 = (tj1 + tj5 + tj6) / 2;
  const int a3 = (tj4 + tj2 + tj6) / 2;
  const int a4 = (tj4 + tj5 + tj3) / 2;
  const int b1 = (tj1 + tj2 + tj4 + tj5) / 2;
  const int b2 = (tj2 + tj3 + tj5 + tj6) / 2;
  const int b3 = (tj3 + tj1 + tj6 + tj4) / 2;

  const int t_min = std::max({a1, a2, a3, a4});
  const int t_max = std::min({b1, b2, b3});

  long double sum = 0.0L;
  for (int t = t_min; t <= t_max; ++t) {
    const long double denom = factorial(t - a1) * factorial(t - a2) * factorial(t - a3) *
                              factorial(t - a4) * factorial(b1 - t) * factorial(b2 - t) *
                              factorial(b3 - t);
    sum += parity_sign(t) * factorial(t + 1) / denom;
  }

  const long double prefactor = triangle_coefficient(tj1, tj2, tj3) * triangle_coefficient(tj1, tj5, tj6) *
                                triangle_coefficient(tj4, tj2, tj6) * triangle_coefficient(tj4, tj5, tj3);
  return static_cast<double>(prefactor * sum);
}

double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6) {
  return wigner6j_twice(HalfInteger::from_double(j1).twice(), HalfInteger::from_double(j2).twice(),
                        HalfInteger::from_double(j3).twice(), HalfInteger::from_double(j4).twice(),
                        HalfInteger::from_double(j5).twice(), HalfInteger::from_double(j6).twice());
}

double clebsch_gordan_twice(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  check_jm(tJ, tM);
  const double w = wigner3j_twice(tj1, tj2, tJ, tm1, tm2, -tM);
  if (w == 0.0) return 0.0;
  return parity_sign((tj1 - tj2 + tM) / 2) * std::sqrt(tJ + 1.0) * w;
}

double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M) {
  return clebsch_gordan_twice(HalfInteger::from_double(j1).twice(), HalfInteger::from_double(m1).twice(),
                              HalfInteger::from_double(j2).twice(), HalfInteger::from_double(m2).twice(),
                              HalfInteger::from_double(J).twice(), HalfInteger::from_double(M).twice());
}

AngularState AngularState::make(double Fg, double Fe, double gg, double ge) {
  AngularState s{HalfInteger::from_double(Fg), HalfInteger::from_double(Fe), gg, ge};
  s.validate();
  return s;
}

void AngularState::validate() const {
  if (Fg.twice() < 0 || Fe.twice() < 0) throw ArgumentError("Fg and Fe must be non-negative");
  if (Fg.twice() == 0 && Fe.twice() == 0) throw ArgumentError("Fg = Fe = 0 has no dipole coupling");
  if (std::abs(Fg.twice() - Fe.twice()) > 2) throw ArgumentError("dipole selection rule requires |Fg - Fe| <= 1");
  if ((Fg.twice() - Fe.twice()) % 2 != 0) throw ArgumentError("Fg and Fe must differ by an integer");
  check_j(Fg.twice());
  check_j(Fe.twice());
  if (!std::isfinite(gg) || !std::isfinite(ge)) throw ArgumentError("gyromagnetic factors must be finite");
}

Polarization::Polarization(const Components& c) : c_(c) {
  const double norm = std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw ArgumentError(fmt::format("polarization norm {} is not 1", norm));
  }
}

Polarization linear_polarization_x() {
  const double s = 1.0 / std::sqrt(2.0);
  return Polarization({std::complex<double>(s, 0.0), 0.0, std::complex<double>(-s, 0.0)});
}

Polarization linear_polarization_z() { return Polarization({0.0, 1.0, 0.0}); }

DipoleComponents dipole_components(const AngularState& state) {
  const int dg = state.ground_dim();
  const int de = state.excited_dim();
  const int tFg = state.Fg.twice();
  const int tFe = state.Fe.twice();
  const double scale = std::sqrt(static_cast<double>(de) / dg);

  DipoleComponents d;
  for (int q = -1; q <= 1; ++q) {
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(dg, de);
    for (int ig = 0; ig < dg; ++ig) {
      const int tmg = 2 * ig - tFg;
      for (int ie = 0; ie < de; ++ie) {
        const int tme = 2 * ie - tFe;
        if (tmg != tme + 2 * q) continue;
        block(ig, ie) = scale * clebsch_gordan_twice(tFe, tme, 2, 2 * q, tFg, tmg);
      }
    }
    d.ge_blocks[q + 1] = std::move(block);
  }
  return d;
}

Eigen::DiagonalMatrix<double, Eigen::Dynamic> zeeman_operator(const AngularState& state) {
  const int dg = state.ground_dim();
  Eigen::VectorXd diag(state.dim());
  for (int i = 0; i < dg; ++i) diag(i) = state.gg * state.mg(i);
  for (int i = 0; i < state.excited_dim(); ++i) diag(dg + i) = state.ge * state.me(i);
  return Eigen::DiagonalMatrix<double, Eigen::Dynamic>(diag);
}

double branching_ratio(double Je, double Jg, double I, double Fe, double Fg) {
  const int tJe = HalfInteger::from_double(Je).twice();
  const int tJg = HalfInteger::from_double(Jg).twice();
  const int tI = HalfInteger::from_double(I).twice();
  const int tFe = HalfInteger::from_double(Fe).twice();
  const int tFg = HalfInteger::from_double(Fg).twice();

  if (!triangle(tJg, tI, tFg) || !triangle(tJe, tI, tFe) || !triangle(tFe, tFg, 2)) return 0.0;

  auto strength = [&](int tF) {
    const double w = wigner6j_twice(tJe, tJg, 2, tF, tFe, tI);
    return (tF + 1.0) * (tJe + 1.0) * w * w;
  };

  double total = 0.0;
  for (int tF = std::abs(tJg - tI); tF <= tJg + tI; tF += 2) total += strength(tF);
  if (total == 0.0) return 0.0;
  return strength(tFg) / total;
}

}  // namespace hanle
