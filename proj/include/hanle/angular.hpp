#pragma once

// Angular-momentum algebra for a Zeeman-degenerate two-level transition.
//
// Conventions (used everywhere in the library):
//   * Condon-Shortley phases for Clebsch-Gordan coefficients and spherical
//     vector components, e_{+1} = -(e_x + i e_y)/sqrt(2), e_{-1} = (e_x - i e_y)/sqrt(2).
//   * Basis ordering of the n = (2Fg+1) + (2Fe+1) dimensional space:
//     [ g: mg = -Fg..+Fg, e: me = -Fe..+Fe ].
//   * Quantization axis z is along the static magnetic field.

#include <array>
#include <complex>
#include <compare>
#include <string>

#include <Eigen/Dense>

namespace hanle {

/// A half-integer quantum number stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  /// Throws ArgumentError unless 2*value is an integer (within 1e-9).
  static HalfInteger from_double(double value);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  int twice_ = 0;
};

/// Largest j accepted by the Racah sums.
inline constexpr int kMaxTwiceJ = 40;

/// Wigner 3-j symbol (j1 j2 j3; m1 m2 m3), arguments given as twice their values.
double wigner3j_twice(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3);
double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3);

/// Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}, arguments given as twice their values.
double wigner6j_twice(int tj1, int tj2, int tj3, int tj4, int tj5, int tj6);
double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6);

/// <j1 m1 j2 m2 | J M>
double clebsch_gordan_twice(int tj1, int tm1, int tj2, int tm2, int tJ, int tM);
double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M);

/// Level structure of the transition Fg -> Fe with gyromagnetic factors.
struct AngularState {
  HalfInteger Fg;
  HalfInteger Fe;
  double gg = 0.0;
  double ge = 0.0;

  /// Validates the dipole selection rule; throws ArgumentError.
  static AngularState make(double Fg, double Fe, double gg, double ge);
  void validate() const;

  int ground_dim() const { return Fg.twice() + 1; }
  int excited_dim() const { return Fe.twice() + 1; }
  int dim() const { return ground_dim() + excited_dim(); }

  double mg(int index) const { return index - Fg.value(); }
  double me(int index) const { return index - Fe.value(); }
};

/// Spherical components (c_{-1}, c_0, c_{+1}) of a unit polarization vector.
class Polarization {
 public:
  using Components = std::array<std::complex<double>, 3>;

  /// Throws ArgumentError if sum |c_q|^2 differs from 1 by more than 1e-12.
  explicit Polarization(const Components& c);

  std::complex<double> component(int q) const { return c_[q + 1]; }
  const Components& components() const { return c_; }

 private:
  Components c_;
};

/// x-polarized light, perpendicular to the field: sigma+ and sigma- in equal parts.
Polarization linear_polarization_x();
/// z-polarized light, parallel to the field (pure pi coupling).
Polarization linear_polarization_z();

/// Spherical components of the ground-excited block of the dimensionless
/// dipole operator. ge(q) is dg x de with element (mg, me) nonzero only when
/// mg = me + q. The matrices are real in the Condon-Shortley convention.
struct DipoleComponents {
  std::array<Eigen::MatrixXd, 3> ge_blocks;

  const Eigen::MatrixXd& ge(int q) const { return ge_blocks[q + 1]; }
  Eigen::MatrixXd eg(int q) const { return ge_blocks[q + 1].transpose(); }
};

/// <Fg mg|Q^q|Fe me> = sqrt((2Fe+1)/(2Fg+1)) <Fe me 1 q|Fg mg>, normalized so that
/// sum_q Q_eg^q Q_ge^q is the identity on the excited manifold.
DipoleComponents dipole_components(const AngularState& state);

/// M_z/hbar in Larmor units: diag(gg*mg, ge*me). Multiplying by a field given
/// as mu_B*B/hbar yields an angular frequency.
Eigen::DiagonalMatrix<double, Eigen::Dynamic> zeeman_operator(const AngularState& state);

/// Fraction of spontaneous decays from (Je, Fe) that land in (Jg, Fg) for a
/// nuclear spin I. Returns 0 when the hyperfine levels are not connected.
double branching_ratio(double Je, double Jg, double I, double Fe, double Fg);

}  // namespace hanle
