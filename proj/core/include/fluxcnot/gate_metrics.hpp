#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/dynamics.hpp"
#include "fluxcnot/pulse.hpp"

namespace fluxcnot {

/// CNOT with qubit A as control, basis order 00, 01, 10, 11.
Eigen::Matrix4cd cnot_matrix();

/// Phases read from the four anchors of a projected gate and the Z rotations
/// that cancel them: post-gate diag(1, e^{i phi_1}, e^{i phi_2},
/// e^{i(phi_1+phi_2)}) with a global e^{-i phi_00}, pre-gate
/// diag(1, e^{i phi_3}, 1, e^{i phi_3}).
struct VirtualZPhases {
  double phi_00 = 0.0;
  double phi_01 = 0.0;
  double phi_a = 0.0;  // arg <10|U|11>
  double phi_b = 0.0;  // arg <11|U|10>
  double phi_1 = 0.0;
  double phi_2 = 0.0;
  double phi_3 = 0.0;

  Eigen::Vector4cd pre() const;
  Eigen::Vector4cd post() const;  // includes the global phase
};

struct VirtualZResult {
  Eigen::Matrix4cd corrected;
  VirtualZPhases phases;
};

/// Throws Error(correction) when any anchor has magnitude <= 1e-3.
VirtualZResult apply_virtual_z(const Eigen::Matrix4cd& u_projected);

/// Applies previously extracted phases to another operator.
Eigen::Matrix4cd apply_virtual_z(const Eigen::Matrix4cd& u, const VirtualZPhases& phases);

/// [Tr(U^dag U) + |Tr(U_cnot^dag U)|^2] / 20.
double coherent_fidelity(const Eigen::Matrix4cd& u_corrected);

/// Linearized decomposition of 1 - F_coherent.
struct ErrorBudget {
  double target_c0 = 0.0;  // (P00->01 + P01->00) / 5
  double target_c1 = 0.0;  // (P10->10 + P11->11) / 5
  double control = 0.0;    // sum over P_{kl -> k'l'} with k' != k, / 5
  double leakage = 0.0;    // 1 - Tr(U^dag U) / 4

  double total() const { return target_c0 + target_c1 + control + leakage; }
};

ErrorBudget error_budget(const Eigen::Matrix4cd& u_projected);
/// Budget from a full or computational-column propagator.
ErrorBudget error_budget(const Eigen::MatrixXcd& propagator, const CoupledSystem& sys);

/// Computational block (rows and columns ordered 00, 01, 10, 11). Accepts the
/// full propagator or the four computational columns.
Eigen::Matrix4cd project_computational(const Eigen::MatrixXcd& propagator, const CoupledSystem& sys);

struct GateReport {
  Eigen::Matrix4cd u_projected;
  Eigen::Matrix4cd u_corrected;
  VirtualZPhases phases;
  double f_coherent = 0.0;
  ErrorBudget budget;
  double dt_used = 0.0;  // ns, after convergence halving
  std::vector<PopulationTrace> populations;

  double error() const { return 1.0 - f_coherent; }
};

struct SimulationOptions {
  bool check_convergence = true;
  /// Halving stops once F_coherent changes by less than this.
  double convergence_tol = 1e-7;
  int max_halvings = 4;
  bool record_populations = false;
  double population_interval = 0.1;  // ns
};

/// Propagate, project, correct and score one pulse. With convergence checking
/// the step is halved until F_coherent settles, else Error(convergence).
GateReport simulate_gate(const CoupledSystem& sys, const PulseSpec& pulse,
                         const SimulationOptions& options = {});

/// 1 - F_coherent at the pulse's own dt, without convergence checking.
/// Returns 1 when the virtual-Z anchors are too small to correct.
double coherent_error(const CoupledSystem& sys, const PulseSpec& pulse);

}  // namespace fluxcnot
