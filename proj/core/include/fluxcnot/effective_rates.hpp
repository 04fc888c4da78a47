#pragma once

#include "fluxcnot/coupled_system.hpp"

namespace fluxcnot {

// Rates are ordinary frequencies in GHz (multiply by 2*pi for angular). The
// drive amplitude f is likewise f/2pi in GHz.
struct EffectiveRates {
  double xi_zx = 0.0;
  double xi_ix = 0.0;
  double xi_zz = 0.0;
  double eta = 0.0;
  double omega_rabi_10_11 = 0.0;
  double lambda_ = 0.0;
  double lambda_12 = 0.0;
  double t_fsl = 0.0;  // ns, infinite without coupling
};

/// Target-to-control drive ratio that darkens |00>-|01>:
/// eta = -<00|n_A|01> / <00|n_B|01>. Throws Error(degeneracy) when the direct
/// element is below 1e-8.
double eta_sd(const CoupledSystem& sys);

/// Resonant |10>-|11> Rabi frequency (GHz) under the darkening condition.
double rabi_rate_sd(const CoupledSystem& sys, double f);

/// Linear-in-J_C form: 2 f |<10|n_A|11> - <00|n_A|01>|.
double rabi_rate_linear(const CoupledSystem& sys, double f);

/// Role-swapped linear form: 2 f |<01|n_B|11> - <00|n_B|10>|.
double rabi_rate_linear_target_a(const CoupledSystem& sys, double f);

/// Pi-pulse duration in ns for a Rabi frequency given in GHz.
double pi_pulse_duration(double rabi_ghz);

/// Dimensionless control-drive amplitude 2 f n01_A / (w01_B - w01_A).
double lambda_from_drive(const CoupledSystem& sys, double f);
/// Inverse of lambda_from_drive.
double drive_from_lambda(const CoupledSystem& sys, double lambda);

/// Linear-order ZX/IX rates at drive amplitude f and ratio eta, plus the
/// static ZZ rate, the darkening ratio, lambda, lambda_12 and the speed limit.
EffectiveRates effective_hamiltonian_rates(const CoupledSystem& sys, double f, double eta);

/// Gate duration (ns) at which the control qubit is driven at lambda = 1.
/// Throws Error(degeneracy) for vanishing qubit detuning or cross element.
double speed_limit(const CoupledSystem& sys);

}  // namespace fluxcnot
