#include "fluxcnot/process_tomography.hpp"

#include <algorithm>
#include <vector>

#include "fluxcnot/dynamics.hpp"
#include "fluxcnot/errors.hpp"
#include "fluxcnot/parallel.hpp"

namespace fluxcnot {

namespace {

using cd = std::complex<double>;

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd s;
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cd(0, -1), cd(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

// Columns are the row-major vectorizations of the 16 Paulis.
const Matrix16cd& pauli_vectors() {
  static const Matrix16cd basis = [] {
    Matrix16cd b;
    for (int m = 0; m < 16; ++m) {
      const Eigen::Matrix4cd p = two_qubit_pauli(m);
      for (int a = 0; a < 4; ++a)
        for (int i = 0; i < 4; ++i) b(4 * a + i, m) = p(a, i);
    }
    return b;
  }();
  return basis;
}

Eigen::Matrix<cd, 16, 1> cnot_coefficients() {
  const Eigen::Matrix4cd u = cnot_matrix();
  Eigen::Matrix<cd, 16, 1> coeff;
  for (int m = 0; m < 16; ++m) coeff(m) = (two_qubit_pauli(m) * u).trace() / 4.0;
  return coeff;
}

}  // namespace

Eigen::Matrix4cd two_qubit_pauli(int index) {
  if (index < 0 || index >= 16) throw Error(ErrorKind::parameter, "pauli index out of range");
  const Eigen::Matrix2cd a = pauli(index / 4);
  const Eigen::Matrix2cd b = pauli(index % 4);
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

ChiMatrix chi_from_basis_outputs(const std::array<Eigen::Matrix4cd, 16>& outputs) {
  // Choi matrix with rows (output a, input i) and columns (output b, input j).
  Matrix16cd choi;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Eigen::Matrix4cd& out = outputs[4 * i + j];
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) choi(4 * a + i, 4 * b + j) = out(a, b);
    }
  const Matrix16cd& basis = pauli_vectors();
  ChiMatrix result;
  result.chi = basis.adjoint() * choi * basis / 16.0;
  result.chi = 0.5 * (result.chi + result.chi.adjoint()).eval();
  result.trace_deficit = std::max(0.0, 1.0 - result.chi.trace().real());
  return result;
}

ChiMatrix chi_from_unitary(const Eigen::Matrix4cd& u) {
  std::array<Eigen::Matrix4cd, 16> outputs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) outputs[4 * i + j] = u.col(i) * u.col(j).adjoint();
  return chi_from_basis_outputs(outputs);
}

double process_fidelity(const ChiMatrix& chi) {
  static const Eigen::Matrix<cd, 16, 1> ideal = cnot_coefficients();
  return (ideal.adjoint() * chi.chi * ideal)(0, 0).real();
}

double average_fidelity(const ChiMatrix& chi) {
  return (chi.chi.trace().real() + 4.0 * process_fidelity(chi)) / 5.0;
}

ChiMatrix process_tomography(const CoupledSystem& sys, const PulseSpec& pulse,
                             const DissipationSpec& dissipation, const TomographyOptions& options) {
  const VirtualZPhases phases =
      apply_virtual_z(project_computational(propagate_computational(sys, pulse), sys)).phases;
  const Eigen::Vector4cd pre = phases.pre();
  const Eigen::Vector4cd post = phases.post();

  const MasterEquationSolver solver(sys, pulse, dissipation);
  const std::vector<int> idx = sys.computational_indices();
  const int dim = sys.dimension();

  std::vector<Eigen::MatrixXcd> evolved(16);
  const int workers = std::clamp(options.parallelism, 1, 16);
  auto run_group = [&](int group) {
    std::vector<int> members;
    std::vector<Eigen::MatrixXcd> inputs;
    for (int u = group; u < 16; u += workers) {
      Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(dim, dim);
      unit(idx[u / 4], idx[u % 4]) = 1.0;
      members.push_back(u);
      inputs.push_back(std::move(unit));
    }
    std::vector<Eigen::MatrixXcd> outputs = solver.evolve(std::move(inputs));
    for (std::size_t k = 0; k < members.size(); ++k) evolved[members[k]] = std::move(outputs[k]);
  };
  parallel_for(static_cast<std::size_t>(workers), workers,
               [&](std::size_t g) { run_group(static_cast<int>(g)); });

  std::array<Eigen::Matrix4cd, 16> outputs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Eigen::Matrix4cd block;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) block(a, b) = evolved[4 * i + j](idx[a], idx[b]);
      // Pre rotation scales |i><j| by pre_i conj(pre_j); post acts on outputs.
      outputs[4 * i + j] = pre(i) * std::conj(pre(j)) *
                           (post.asDiagonal() * block * post.conjugate().asDiagonal());
    }
  return chi_from_basis_outputs(outputs);
}

DissipativeReport simulate_dissipative_gate(const CoupledSystem& sys, const PulseSpec& pulse,
                                            const DissipationSpec& dissipation,
                                            const DissipativeOptions& options) {
  PulseSpec p = pulse;
  p.dt = options.initial_dt;
  const TomographyOptions tomo{options.parallelism};
  auto run = [&] {
    DissipativeReport r;
    r.chi = process_tomography(sys, p, dissipation, tomo);
    r.process_fidelity = process_fidelity(r.chi);
    r.average_fidelity = average_fidelity(r.chi);
    r.dt_used = p.t_gate / std::max(1L, std::lround(p.t_gate / p.dt));
    return r;
  };
  DissipativeReport report = run();
  for (int h = 0; h < options.max_halvings; ++h) {
    p.dt *= 0.5;
    DissipativeReport finer = run();
    const double change = std::abs(finer.average_fidelity - report.average_fidelity);
    report = std::move(finer);
    if (change < options.convergence_tol) return report;
  }
  throw Error(ErrorKind::convergence, "dissipative gate: F_avg did not settle under dt halving");
}

}  // namespace fluxcnot
