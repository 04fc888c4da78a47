#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/pulse.hpp"

namespace fluxcnot {

/// Energy relaxation of both qubits. Times in microseconds; infinity turns a
/// channel off. There is no pure dephasing, so T2 = 2 T1.
struct DissipationSpec {
  double t1_01 = std::numeric_limits<double>::infinity();
  double t1_12 = std::numeric_limits<double>::infinity();

  void validate() const;
  bool is_closed() const;
};

/// Lindblad evolution under the same drive as DrivenPropagator. Collapse
/// operators are |0><1| and |1><2| of each bare qubit, tensored with the
/// identity on the partner and rotated into the dressed basis.
///
/// Each step applies the unitary split step followed by an explicit dissipator
/// step, with the first and last dissipator steps halved. The dissipator step
/// is trace preserving to rounding.
class MasterEquationSolver {
 public:
  MasterEquationSolver(const CoupledSystem& sys, const PulseSpec& pulse,
                       const DissipationSpec& dissipation);

  int dimension() const { return static_cast<int>(energies_.size()); }
  int steps() const { return steps_; }
  double step() const { return dt_; }

  /// Evolves every operator in `rhos` in lockstep. Inputs need not be
  /// physical states, so arbitrary operator bases can be pushed through.
  std::vector<Eigen::MatrixXcd> evolve(std::vector<Eigen::MatrixXcd> rhos) const;

 private:
  struct Channel {
    double rate = 0.0;     // 1/ns
    Eigen::MatrixXcd to;   // L = to * from^dag
    Eigen::MatrixXcd from;
  };

  void dissipate(Eigen::MatrixXcd& rho, double h) const;

  PulseSpec pulse_;
  Eigen::VectorXd energies_;
  Eigen::VectorXd drive_evals_;
  Eigen::MatrixXcd drive_vecs_;
  Eigen::VectorXcd half_phase_;
  std::vector<Channel> channels_;
  Eigen::MatrixXcd decay_;  // sum of rate * L^dag L
  int steps_ = 0;
  double dt_ = 0.0;
};

/// Evolves a physical density matrix over the pulse. Throws Error(input)
/// unless rho0 is Hermitian, positive semidefinite and has unit trace.
Eigen::MatrixXcd propagate_master(const CoupledSystem& sys, const PulseSpec& pulse,
                                  const DissipationSpec& dissipation,
                                  const Eigen::MatrixXcd& rho0);

}  // namespace fluxcnot
