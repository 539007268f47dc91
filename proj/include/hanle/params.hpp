#pragma once

#include <string>

#include "hanle/angular.hpp"

namespace hanle {

/// All rates and fields of the optical Bloch equations, in units of the
/// spontaneous decay rate (Gamma = 1). Magnetic fields are Larmor scales
/// mu_B*B/hbar; the gyromagnetic factors live in AngularState.
struct SystemParams {
  AngularState state;
  double rabi = 0.0;             ///< reduced Rabi frequency Omega
  double detuning = 0.0;         ///< Delta = omega0 - omega
  double transit_rate = 1e-3;    ///< gamma, finite interaction time
  double collision_rate = 0.0;   ///< gamma_coll, excited-state decoherence
  double branching = 1.0;        ///< b, 1 for a closed transition
  double b0 = 0.0;               ///< static longitudinal field
  double b1 = 0.0;               ///< modulation amplitude
  double modulation_freq = 0.0;  ///< delta = 2 pi f
  Polarization polarization = linear_polarization_x();

  int dim() const { return state.dim(); }

  /// Throws ParameterError on a violated invariant. transit_rate = 0 is
  /// accepted here (closed-system dynamics); solvers that need a unique
  /// steady state call require_relaxation() as well.
  void validate() const;
  void require_relaxation() const;

  /// Compact "name=value" listing for error messages.
  std::string describe() const;
};

/// Modulation amplitude that keeps the first-order expansion accurate.
inline double default_modulation_amplitude(double transit_rate) { return 0.1 * transit_rate; }

}  // namespace hanle
