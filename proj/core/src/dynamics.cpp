#include "fluxcnot/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

DrivenPropagator::DrivenPropagator(const CoupledSystem& sys, const PulseSpec& pulse)
    : pulse_(pulse), energies_(sys.dressed_energies()) {
  pulse.validate();
  steps_ = std::max(1, static_cast<int>(std::lround(pulse.t_gate / pulse.dt)));
  dt_ = pulse.t_gate / steps_;

  const Eigen::MatrixXcd drive =
      sys.charge_operator(QubitId::a) + pulse.eta * sys.charge_operator(QubitId::b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(drive);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::numeric, "propagator: drive operator diagonalization failed");
  }
  drive_evals_ = solver.eigenvalues();
  drive_vecs_ = solver.eigenvectors();

  const int dim = dimension();
  half_phase_.resize(dim);
  Eigen::VectorXcd full_phase(dim);
  for (int k = 0; k < dim; ++k) {
    half_phase_(k) = std::polar(1.0, -kTwoPi * energies_(k) * 0.5 * dt_);
    full_phase(k) = std::polar(1.0, -kTwoPi * energies_(k) * dt_);
  }
  fused_ = drive_vecs_.adjoint() * full_phase.asDiagonal() * drive_vecs_;
}

template <typename Callback>
Eigen::MatrixXcd DrivenPropagator::run(const Eigen::MatrixXcd& initial, int stride,
                                       Callback&& on_sample) const {
  const int dim = dimension();
  if (initial.rows() != dim) {
    throw Error(ErrorKind::input, "propagator: initial states have the wrong dimension");
  }
  // y = W^dag exp(+i H0 dt/2) psi; the state at t_n is exp(-i H0 dt/2) W y.
  Eigen::MatrixXcd y = drive_vecs_.adjoint() * (half_phase_.conjugate().asDiagonal() * initial);
  Eigen::MatrixXcd tmp(dim, initial.cols());
  Eigen::VectorXcd kick(dim);

  if (stride > 0) on_sample(0, y);
  const double amp_scale = 2.0 * kTwoPi;  // 2 f(t), angular
  for (int n = 0; n < steps_; ++n) {
    const double t_mid = (n + 0.5) * dt_;
    const double c = amp_scale * envelope(pulse_, t_mid) * std::cos(kTwoPi * pulse_.omega_d * t_mid);
    tmp.noalias() = fused_ * y;
    for (int k = 0; k < dim; ++k) kick(k) = std::polar(1.0, -c * drive_evals_(k) * dt_);
    y.noalias() = kick.asDiagonal() * tmp;
    if (stride > 0 && ((n + 1) % stride == 0 || n + 1 == steps_)) on_sample(n + 1, y);
  }
  return half_phase_.asDiagonal() * (drive_vecs_ * y);
}

Eigen::MatrixXcd DrivenPropagator::evolve(const Eigen::MatrixXcd& initial) const {
  return run(initial, 0, [](int, const Eigen::MatrixXcd&) {});
}

Eigen::MatrixXcd DrivenPropagator::evolve_recording(const Eigen::MatrixXcd& initial,
                                                    double sample_interval,
                                                    std::vector<Eigen::MatrixXd>& samples,
                                                    std::vector<double>& times) const {
  const int stride = std::max(1, static_cast<int>(std::lround(sample_interval / dt_)));
  samples.clear();
  times.clear();
  return run(initial, stride, [&](int n, const Eigen::MatrixXcd& y) {
    // exp(-i H0 dt/2) is diagonal and drops out of populations.
    samples.push_back((drive_vecs_ * y).cwiseAbs2());
    times.push_back(n * dt_);
  });
}

Eigen::MatrixXcd propagate(const CoupledSystem& sys, const PulseSpec& pulse) {
  const DrivenPropagator prop(sys, pulse);
  return prop.evolve(Eigen::MatrixXcd::Identity(sys.dimension(), sys.dimension()));
}

Eigen::MatrixXcd propagate_computational(const CoupledSystem& sys, const PulseSpec& pulse) {
  const DrivenPropagator prop(sys, pulse);
  const std::vector<int> idx = sys.computational_indices();
  Eigen::MatrixXcd initial = Eigen::MatrixXcd::Zero(sys.dimension(), 4);
  for (int c = 0; c < 4; ++c) initial(idx[c], c) = 1.0;
  return prop.evolve(initial);
}

std::vector<PopulationTrace> population_traces(const CoupledSystem& sys, const PulseSpec& pulse,
                                               double sample_interval) {
  const DrivenPropagator prop(sys, pulse);
  const std::vector<int> idx = sys.computational_indices();
  Eigen::MatrixXcd initial = Eigen::MatrixXcd::Zero(sys.dimension(), 4);
  for (int c = 0; c < 4; ++c) initial(idx[c], c) = 1.0;

  std::vector<Eigen::MatrixXd> samples;
  std::vector<double> times;
  prop.evolve_recording(initial, sample_interval, samples, times);

  const BareLabel labels[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::vector<PopulationTrace> out(4);
  for (int c = 0; c < 4; ++c) {
    out[c].initial = labels[c];
    out[c].times = times;
    out[c].probabilities.resize(static_cast<Eigen::Index>(samples.size()), sys.dimension());
    for (std::size_t s = 0; s < samples.size(); ++s) {
      out[c].probabilities.row(static_cast<Eigen::Index>(s)) = samples[s].col(c).transpose();
    }
  }
  return out;
}

}  // namespace fluxcnot
