#include "hanle/verify.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hanle/oracle.hpp"
#include "hanle/presets.hpp"

namespace hanle {

std::vector<VerifyPoint> verify_points() {
  // B0 = 0.004 sits between the central resonance and the sidebands at
  // delta/(2|gg|) = 0.01, where both lock-in channels are well away from zero.
  std::vector<VerifyPoint> points;
  SystemParams eit = rb87_d1_preset(2, 1, CellRegime::Vacuum).params;
  eit.b0 = 0.004;
  points.push_back({"Fg=2->Fe=1 vacuum, B0=0.004", eit});

  SystemParams eia = rb87_d1_preset(1, 2, CellRegime::Vacuum).params;
  eia.b0 = 0.004;
  points.push_back({"Fg=1->Fe=2 vacuum, B0=0.004", eia});

  // Collisional regime at the vacuum transit rate: the buffer-cell gamma of
  // 1e-5 would need ~1e6/Gamma of integration per trajectory.
  SystemParams quenched = eia;
  quenched.collision_rate = 4.0;
  points.push_back({"Fg=1->Fe=2 gamma_coll=4, B0=0.004", quenched});
  return points;
}

double lockin_relative_error(const LockinPair& perturbative, const LockinPair& oracle) {
  return std::hypot(perturbative.inphase - oracle.inphase, perturbative.quadrature - oracle.quadrature) /
         std::hypot(oracle.inphase, oracle.quadrature);
}

std::vector<CheckResult> run_verification(const PointSolver& solver) {
  std::vector<CheckResult> checks;
  for (const VerifyPoint& point : verify_points()) {
    const SignalPoint s = solver(point.params, point.params.b0);
    const LockinPair oracle = oracle_lockin<double>(point.params);
    const double err = lockin_relative_error({s.lambda_inphase, s.lambda_quadrature}, oracle);
    checks.push_back({"oracle " + point.name, err, kVerifyRelativeTolerance, err <= kVerifyRelativeTolerance});
  }

  SystemParams closed = rb87_d1_preset(1, 2, CellRegime::Vacuum).params;
  closed.branching = 1.0;
  const DensityMatrix<double> sigma = steady_state<double>(closed, 0.0);
  const double trace_error = std::abs(sigma.trace() - std::complex<double>(1.0));
  checks.push_back({"closed transition Tr(sigma) = 1", trace_error, kVerifyTraceTolerance,
                    trace_error <= kVerifyTraceTolerance});
  return checks;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::string out = fmt::format("{:<44} {:>12} {:>12}  {}\n", "check", "error", "tolerance", "result");
  for (const CheckResult& c : checks) {
    out += fmt::format("{:<44} {:>12.3e} {:>12.1e}  {}\n", c.name, c.value, c.tolerance, c.passed ? "PASS" : "FAIL");
  }
  return out;
}

}  // namespace hanle
