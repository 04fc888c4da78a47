#include "fluxcnot/gate_metrics.hpp"

#include <cmath>
#include <complex>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

namespace {

using cd = std::complex<double>;
constexpr double kMinAnchor = 1e-3;

}  // namespace

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

Eigen::Vector4cd VirtualZPhases::pre() const {
  return {1.0, std::polar(1.0, phi_3), 1.0, std::polar(1.0, phi_3)};
}

Eigen::Vector4cd VirtualZPhases::post() const {
  const cd g = std::polar(1.0, -phi_00);
  return {g, g * std::polar(1.0, phi_1), g * std::polar(1.0, phi_2), g * std::polar(1.0, phi_1 + phi_2)};
}

VirtualZResult apply_virtual_z(const Eigen::Matrix4cd& u) {
  const cd anchors[4] = {u(0, 0), u(1, 1), u(2, 3), u(3, 2)};
  for (const cd& a : anchors) {
    if (std::abs(a) <= kMinAnchor) {
      throw Error(ErrorKind::correction, "virtual Z: anchor element too small to extract a phase");
    }
  }
  VirtualZPhases p;
  p.phi_00 = std::arg(anchors[0]);
  p.phi_01 = std::arg(anchors[1]);
  p.phi_a = std::arg(anchors[2]);
  p.phi_b = std::arg(anchors[3]);
  p.phi_1 = 0.5 * (-p.phi_01 + p.phi_a - p.phi_b + p.phi_00);
  p.phi_2 = 0.5 * (p.phi_01 - p.phi_a - p.phi_b + p.phi_00);
  p.phi_3 = 0.5 * (-p.phi_01 - p.phi_a + p.phi_b + p.phi_00);
  return {apply_virtual_z(u, p), p};
}

Eigen::Matrix4cd apply_virtual_z(const Eigen::Matrix4cd& u, const VirtualZPhases& phases) {
  return phases.post().asDiagonal() * u * phases.pre().asDiagonal();
}

double coherent_fidelity(const Eigen::Matrix4cd& u) {
  const double norm = (u.adjoint() * u).trace().real();
  const double overlap = std::norm((cnot_matrix().adjoint() * u).trace());
  return (norm + overlap) / 20.0;
}

ErrorBudget error_budget(const Eigen::Matrix4cd& u) {
  // P_{in -> out} = |U(out, in)|^2 with index 2k + l.
  const Eigen::Matrix4d p = u.cwiseAbs2();
  ErrorBudget b;
  b.target_c0 = (p(1, 0) + p(0, 1)) / 5.0;
  b.target_c1 = (p(2, 2) + p(3, 3)) / 5.0;
  double control = 0.0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int lp = 0; lp < 2; ++lp) control += p(2 * (1 - k) + lp, 2 * k + l);
  b.control = control / 5.0;
  b.leakage = 1.0 - p.sum() / 4.0;
  return b;
}

ErrorBudget error_budget(const Eigen::MatrixXcd& propagator, const CoupledSystem& sys) {
  return error_budget(project_computational(propagator, sys));
}

Eigen::Matrix4cd project_computational(const Eigen::MatrixXcd& propagator, const CoupledSystem& sys) {
  const std::vector<int> idx = sys.computational_indices();
  const bool columns_only = propagator.cols() == 4 && sys.dimension() != 4;
  if (propagator.rows() != sys.dimension() || (!columns_only && propagator.cols() != sys.dimension())) {
    throw Error(ErrorKind::input, "projection: propagator shape does not match the system");
  }
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = propagator(idx[r], columns_only ? c : idx[c]);
  return out;
}

namespace {

GateReport evaluate(const CoupledSystem& sys, const PulseSpec& pulse) {
  GateReport r;
  r.u_projected = project_computational(propagate_computational(sys, pulse), sys);
  const VirtualZResult vz = apply_virtual_z(r.u_projected);
  r.u_corrected = vz.corrected;
  r.phases = vz.phases;
  r.f_coherent = coherent_fidelity(r.u_corrected);
  r.budget = error_budget(r.u_projected);
  r.dt_used = pulse.t_gate / std::max(1L, std::lround(pulse.t_gate / pulse.dt));
  return r;
}

}  // namespace

GateReport simulate_gate(const CoupledSystem& sys, const PulseSpec& pulse,
                         const SimulationOptions& options) {
  GateReport report = evaluate(sys, pulse);
  if (options.check_convergence) {
    PulseSpec refined = pulse;
    bool converged = false;
    for (int h = 0; h < options.max_halvings; ++h) {
      refined.dt *= 0.5;
      GateReport finer = evaluate(sys, refined);
      const double change = std::abs(finer.f_coherent - report.f_coherent);
      report = std::move(finer);
      if (change < options.convergence_tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw Error(ErrorKind::convergence, "simulate: F_coherent did not settle under dt halving");
    }
  }
  if (options.record_populations) {
    PulseSpec sampled = pulse;
    sampled.dt = report.dt_used;
    report.populations = population_traces(sys, sampled, options.population_interval);
  }
  return report;
}

double coherent_error(const CoupledSystem& sys, const PulseSpec& pulse) {
  try {
    return 1.0 - evaluate(sys, pulse).f_coherent;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::correction) return 1.0;
    throw;
  }
}

}  // namespace fluxcnot
