#include "fluxcnot/lindblad.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool valid_time(double t) { return t > 0.0 && !std::isnan(t); }

}  // namespace

void DissipationSpec::validate() const {
  if (!valid_time(t1_01) || !valid_time(t1_12)) {
    throw Error(ErrorKind::parameter, "dissipation: relaxation times must be positive");
  }
}

bool DissipationSpec::is_closed() const { return std::isinf(t1_01) && std::isinf(t1_12); }

MasterEquationSolver::MasterEquationSolver(const CoupledSystem& sys, const PulseSpec& pulse,
                                           const DissipationSpec& dissipation)
    : pulse_(pulse), energies_(sys.dressed_energies()) {
  pulse.validate();
  dissipation.validate();
  steps_ = std::max(1, static_cast<int>(std::lround(pulse.t_gate / pulse.dt)));
  dt_ = pulse.t_gate / steps_;

  const Eigen::MatrixXcd drive =
      sys.charge_operator(QubitId::a) + pulse.eta * sys.charge_operator(QubitId::b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(drive);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::numeric, "master equation: drive operator diagonalization failed");
  }
  drive_evals_ = solver.eigenvalues();
  drive_vecs_ = solver.eigenvectors();

  const int dim = dimension();
  half_phase_.resize(dim);
  for (int k = 0; k < dim; ++k) half_phase_(k) = std::polar(1.0, -kTwoPi * energies_(k) * 0.5 * dt_);

  // Bare |k l> sits at row k*K + l of the dressed vectors.
  const int levels = sys.levels_per_qubit();
  const Eigen::MatrixXcd dressed = sys.dressed_vectors().cast<std::complex<double>>();
  auto embed = [&](QubitId q, int level) {
    Eigen::MatrixXcd m(dim, levels);
    for (int s = 0; s < levels; ++s) {
      const int row = q == QubitId::a ? level * levels + s : s * levels + level;
      m.col(s) = dressed.row(row).adjoint();
    }
    return m;
  };
  decay_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (QubitId q : {QubitId::a, QubitId::b}) {
    for (auto [lower, t1] : {std::pair{0, dissipation.t1_01}, std::pair{1, dissipation.t1_12}}) {
      if (std::isinf(t1)) continue;
      Channel c{1.0 / (t1 * 1e3), embed(q, lower), embed(q, lower + 1)};
      // L^dag L = from * to^dag to * from^dag, and to^dag to = 1.
      decay_.noalias() += c.rate * c.from * c.from.adjoint();
      channels_.push_back(std::move(c));
    }
  }
}

void MasterEquationSolver::dissipate(Eigen::MatrixXcd& rho, double h) const {
  if (channels_.empty()) return;
  Eigen::MatrixXcd delta = -0.5 * (decay_ * rho + rho * decay_);
  for (const Channel& c : channels_) {
    const Eigen::MatrixXcd inner = c.from.adjoint() * rho * c.from;
    delta.noalias() += c.rate * (c.to * inner * c.to.adjoint());
  }
  rho.noalias() += h * delta;
}

std::vector<Eigen::MatrixXcd> MasterEquationSolver::evolve(std::vector<Eigen::MatrixXcd> rhos) const {
  const int dim = dimension();
  for (const auto& r : rhos) {
    if (r.rows() != dim || r.cols() != dim) {
      throw Error(ErrorKind::input, "master equation: operator has the wrong dimension");
    }
  }
  const double amp_scale = 2.0 * kTwoPi;
  Eigen::MatrixXcd step(dim, dim);
  Eigen::MatrixXcd tmp(dim, dim);
  Eigen::VectorXcd kick(dim);

  for (auto& r : rhos) dissipate(r, 0.5 * dt_);
  for (int n = 0; n < steps_; ++n) {
    const double t_mid = (n + 0.5) * dt_;
    const double c = amp_scale * envelope(pulse_, t_mid) * std::cos(kTwoPi * pulse_.omega_d * t_mid);
    for (int k = 0; k < dim; ++k) kick(k) = std::polar(1.0, -c * drive_evals_(k) * dt_);
    step.noalias() = drive_vecs_ * kick.asDiagonal() * drive_vecs_.adjoint();
    step = half_phase_.asDiagonal() * step * half_phase_.asDiagonal();
    const double h = n + 1 == steps_ ? 0.5 * dt_ : dt_;
    for (auto& r : rhos) {
      tmp.noalias() = step * r;
      r.noalias() = tmp * step.adjoint();
      dissipate(r, h);
    }
  }
  return rhos;
}

Eigen::MatrixXcd propagate_master(const CoupledSystem& sys, const PulseSpec& pulse,
                                  const DissipationSpec& dissipation,
                                  const Eigen::MatrixXcd& rho0) {
  const int dim = sys.dimension();
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw Error(ErrorKind::input, "master equation: density matrix has the wrong dimension");
  }
  const double scale = std::max(1.0, rho0.cwiseAbs().maxCoeff());
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw Error(ErrorKind::input, "master equation: density matrix is not Hermitian");
  }
  if (std::abs(rho0.trace() - 1.0) > 1e-9) {
    throw Error(ErrorKind::input, "master equation: density matrix does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho0, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-9) {
    throw Error(ErrorKind::input, "master equation: density matrix is not positive semidefinite");
  }
  const MasterEquationSolver solver(sys, pulse, dissipation);
  return solver.evolve({rho0}).front();
}

}  // namespace fluxcnot
