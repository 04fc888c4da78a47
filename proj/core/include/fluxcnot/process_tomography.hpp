#pragma once

#include <array>

#include <Eigen/Dense>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/gate_metrics.hpp"
#include "fluxcnot/lindblad.hpp"
#include "fluxcnot/pulse.hpp"

namespace fluxcnot {

using Matrix16cd = Eigen::Matrix<std::complex<double>, 16, 16>;

/// Two-qubit Pauli operator sigma_a (x) sigma_b with index 4a + b, where
/// sigma_0..3 = I, X, Y, Z and qubit A is the left factor.
Eigen::Matrix4cd two_qubit_pauli(int index);

/// Process matrix of E(X) = sum_mn chi_mn P_m X P_n on the computational
/// subspace. Leakage shows up as Tr(chi) < 1.
struct ChiMatrix {
  Matrix16cd chi = Matrix16cd::Zero();
  double trace_deficit = 0.0;
};

/// Chi of a map given by its action on the 16 units |i><j| (index 4i + j).
ChiMatrix chi_from_basis_outputs(const std::array<Eigen::Matrix4cd, 16>& outputs);

/// Rank-one chi of a unitary.
ChiMatrix chi_from_unitary(const Eigen::Matrix4cd& u);

/// Tr(chi_ideal chi) against the CNOT.
double process_fidelity(const ChiMatrix& chi);

/// (Tr chi + 4 F_pro) / 5. Equals (4 F_pro + 1) / 5 for trace-preserving
/// maps and [Tr(U^dag U) + |Tr(U_cnot^dag U)|^2] / 20 for a projected unitary.
double average_fidelity(const ChiMatrix& chi);

struct TomographyOptions {
  int parallelism = 1;
};

/// Pushes the 16 computational units |i><j| through the master equation at
/// the pulse's dt, projects the outputs onto the computational block, applies
/// the virtual Z rotations extracted from the closed-system gate at the same
/// dt, and assembles chi.
ChiMatrix process_tomography(const CoupledSystem& sys, const PulseSpec& pulse,
                             const DissipationSpec& dissipation,
                             const TomographyOptions& options = {});

struct DissipativeReport {
  ChiMatrix chi;
  double process_fidelity = 0.0;
  double average_fidelity = 0.0;
  double dt_used = 0.0;

  double error() const { return 1.0 - average_fidelity; }
};

struct DissipativeOptions {
  double initial_dt = 2e-3;  // ns
  double convergence_tol = 1e-7;
  int max_halvings = 3;
  int parallelism = 1;
};

/// Tomography with the step halved from `initial_dt` until F_avg changes by
/// less than the tolerance. Throws Error(convergence) otherwise.
DissipativeReport simulate_dissipative_gate(const CoupledSystem& sys, const PulseSpec& pulse,
                                            const DissipationSpec& dissipation,
                                            const DissipativeOptions& options = {});

}  // namespace fluxcnot
