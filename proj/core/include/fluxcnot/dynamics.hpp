#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/pulse.hpp"

namespace fluxcnot {

/// Occupation probabilities of every dressed state on a fixed time grid,
/// one trace per initial state.
struct PopulationTrace {
  BareLabel initial;
  std::vector<double> times;     // ns
  Eigen::MatrixXd probabilities;  // rows: time samples, cols: dressed index
};

/// Lab-frame evolution under
///   H(t) = 2 pi [ diag(E) + 2 f(t) cos(2 pi w_d t) (n_A + eta n_B) ]
/// in the dressed basis, without a rotating-wave approximation.
///
/// Each step of length dt samples the drive at the midpoint and is split as
/// exp(-i H0 dt/2) exp(-i c D dt) exp(-i H0 dt/2). The drive operator D is
/// diagonalized once, so consecutive half steps fuse into a fixed matrix and
/// a step costs one matrix product plus a diagonal phase.
class DrivenPropagator {
 public:
  DrivenPropagator(const CoupledSystem& sys, const PulseSpec& pulse);

  int dimension() const { return static_cast<int>(energies_.size()); }
  int steps() const { return steps_; }
  double step() const { return dt_; }

  /// Evolves the columns of `initial` (dressed-basis states) over the pulse.
  Eigen::MatrixXcd evolve(const Eigen::MatrixXcd& initial) const;

  /// As evolve(), also sampling populations of each column every
  /// `sample_interval` ns (rounded to a whole number of steps).
  Eigen::MatrixXcd evolve_recording(const Eigen::MatrixXcd& initial, double sample_interval,
                                    std::vector<Eigen::MatrixXd>& samples,
                                    std::vector<double>& times) const;

 private:
  template <typename Callback>
  Eigen::MatrixXcd run(const Eigen::MatrixXcd& initial, int stride, Callback&& on_sample) const;

  PulseSpec pulse_;
  Eigen::VectorXd energies_;     // GHz
  Eigen::VectorXd drive_evals_;  // eigenvalues of D
  Eigen::MatrixXcd drive_vecs_;  // W, D = W diag W^dag
  Eigen::MatrixXcd fused_;       // W^dag exp(-i H0 dt) W
  Eigen::VectorXcd half_phase_;  // exp(-i H0 dt / 2)
  int steps_ = 0;
  double dt_ = 0.0;
};

/// Full K^2 x K^2 propagator in the dressed basis.
Eigen::MatrixXcd propagate(const CoupledSystem& sys, const PulseSpec& pulse);

/// Columns of the propagator for the computational inputs 00, 01, 10, 11.
Eigen::MatrixXcd propagate_computational(const CoupledSystem& sys, const PulseSpec& pulse);

/// Population traces for the four computational initial states.
std::vector<PopulationTrace> population_traces(const CoupledSystem& sys, const PulseSpec& pulse,
                                               double sample_interval = 0.1);

}  // namespace fluxcnot
