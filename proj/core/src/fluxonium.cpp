#include "fluxcnot/fluxonium.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

void FluxoniumSpec::validate() const {
  if (!(e_c > 0.0)) throw Error(ErrorKind::parameter, "fluxonium: e_c must be positive");
  if (!(e_l > 0.0)) throw Error(ErrorKind::parameter, "fluxonium: e_l must be positive");
  if (!(e_j >= 0.0)) throw Error(ErrorKind::parameter, "fluxonium: e_j must be non-negative");
  if (!std::isfinite(phi_ext)) throw Error(ErrorKind::parameter, "fluxonium: phi_ext must be finite");
  if (basis_size < 20) {
    throw Error(ErrorKind::parameter,
                "fluxonium: basis_size must be at least 20, got " + std::to_string(basis_size));
  }
}

double FluxoniumSpec::plasma_frequency() const { return std::sqrt(8.0 * e_l * e_c); }

double FluxoniumSpec::charge_zpf() const { return std::pow(e_l / (32.0 * e_c), 0.25); }

double FluxoniumSpec::phase_zpf() const { return std::pow(2.0 * e_c / e_l, 0.25); }

PhaseFunctions phase_functions(int basis_size, double phase_zpf) {
  using cd = std::complex<double>;
  const int n = basis_size;
  // exp(i phi) = D(alpha) with alpha = i * phase_zpf. Rows follow from
  // a D = D (a + alpha); row 0 is the coherent-state overlap <-alpha|n>.
  const cd alpha{0.0, phase_zpf};
  Eigen::MatrixXcd d(n, n);
  d(0, 0) = std::exp(-0.5 * std::norm(alpha));
  for (int col = 1; col < n; ++col) {
    d(0, col) = d(0, col - 1) * (-std::conj(alpha)) / std::sqrt(static_cast<double>(col));
  }
  for (int row = 0; row + 1 < n; ++row) {
    const double inv = 1.0 / std::sqrt(static_cast<double>(row + 1));
    d(row + 1, 0) = alpha * d(row, 0) * inv;
    for (int col = 1; col < n; ++col) {
      d(row + 1, col) =
          (std::sqrt(static_cast<double>(col)) * d(row, col - 1) + alpha * d(row, col)) * inv;
    }
  }

  const Eigen::MatrixXcd dh = d.adjoint();
  const Eigen::MatrixXcd c = 0.5 * (d + dh);
  const Eigen::MatrixXcd s = (d - dh) / cd{0.0, 2.0};

  PhaseFunctions out{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // cos(phi) couples states of equal parity, sin(phi) opposite parity.
      if ((i + j) % 2 == 0) {
        out.cos_phi(i, j) = c(i, j).real();
      } else {
        out.sin_phi(i, j) = s(i, j).real();
      }
    }
  }
  out.cos_phi = 0.5 * (out.cos_phi + out.cos_phi.transpose()).eval();
  out.sin_phi = 0.5 * (out.sin_phi + out.sin_phi.transpose()).eval();
  return out;
}

Eigen::MatrixXd build_hamiltonian(const FluxoniumSpec& spec) {
  spec.validate();
  const int n = spec.basis_size;
  const double wp = spec.plasma_frequency();

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) h(m, m) = wp * (m + 0.5);
  if (spec.e_j == 0.0) return h;

  const PhaseFunctions pf = phase_functions(n, spec.phase_zpf());
  // cos(phi - phi_ext) = cos(phi_ext) cos(phi) + sin(phi_ext) sin(phi)
  const double c = std::cos(spec.phi_ext);
  const double s = std::sin(spec.phi_ext);
  h -= spec.e_j * (c * pf.cos_phi);
  if (std::abs(s) > 1e-15) h -= spec.e_j * (s * pf.sin_phi);
  return h;
}

QubitSpectrum diagonalize(const FluxoniumSpec& spec, int keep) {
  spec.validate();
  if (keep < 1 || keep > spec.basis_size / 2) {
    throw Error(ErrorKind::truncation,
                "fluxonium: cannot keep " + std::to_string(keep) + " levels from a basis of " +
                    std::to_string(spec.basis_size) + " (limit is basis_size/2)");
  }

  const Eigen::MatrixXd h = build_hamiltonian(spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::numeric, "fluxonium: eigen-solver failed");
  }

  Eigen::MatrixXd vecs = solver.eigenvectors().leftCols(keep);
  for (int k = 0; k < keep; ++k) {
    Eigen::Index arg = 0;
    vecs.col(k).cwiseAbs().maxCoeff(&arg);
    if (vecs(arg, k) < 0.0) vecs.col(k) *= -1.0;
  }

  // n = i n_zpf (a^dag - a); keep the real antisymmetric factor.
  const int n = spec.basis_size;
  Eigen::MatrixXd adag_minus_a = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m + 1 < n; ++m) {
    const double s = std::sqrt(static_cast<double>(m + 1));
    adag_minus_a(m + 1, m) = s;
    adag_minus_a(m, m + 1) = -s;
  }

  QubitSpectrum out;
  const Eigen::VectorXd evals = solver.eigenvalues().head(keep);
  out.energies = evals.array() - evals(0);
  out.n_elements = spec.charge_zpf() * (vecs.transpose() * adag_minus_a * vecs);
  return out;
}

}  // namespace fluxcnot
