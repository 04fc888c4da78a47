#include "fluxcnot/coupled_system.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

namespace {

constexpr double kMinLabelOverlap = 0.5;

QubitSpectrum truncate(const QubitSpectrum& s, int levels) {
  QubitSpectrum out;
  out.energies = s.energies.head(levels);
  out.n_elements = s.n_elements.topLeftCorner(levels, levels);
  return out;
}

}  // namespace

std::string to_string(BareLabel label) {
  return "|" + std::to_string(label.a) + std::to_string(label.b) + ">";
}

CoupledSystem CoupledSystem::assemble(const FluxoniumSpec& spec_a, const FluxoniumSpec& spec_b,
                                      double j_c, int levels_per_qubit) {
  return from_spectra(diagonalize(spec_a, levels_per_qubit), diagonalize(spec_b, levels_per_qubit),
                      j_c, levels_per_qubit);
}

CoupledSystem CoupledSystem::from_spectra(const QubitSpectrum& spectrum_a,
                                          const QubitSpectrum& spectrum_b, double j_c,
                                          int levels_per_qubit) {
  if (levels_per_qubit < 4) {
    throw Error(ErrorKind::parameter, "coupled system: levels_per_qubit must be at least 4");
  }
  if (!(j_c >= 0.0) || !std::isfinite(j_c)) {
    throw Error(ErrorKind::parameter, "coupled system: j_c must be finite and non-negative");
  }
  if (spectrum_a.level_count() < levels_per_qubit || spectrum_b.level_count() < levels_per_qubit) {
    throw Error(ErrorKind::truncation, "coupled system: spectra hold fewer levels than requested");
  }

  CoupledSystem sys;
  const int k = levels_per_qubit;
  const int dim = k * k;
  sys.levels_ = k;
  sys.j_c_ = j_c;
  sys.spectrum_a_ = truncate(spectrum_a, k);
  sys.spectrum_b_ = truncate(spectrum_b, k);

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(k, k);
  const Eigen::MatrixXd& na = sys.spectrum_a_.n_elements;
  const Eigen::MatrixXd& nb = sys.spectrum_b_.n_elements;

  // Real representation: n_A (x) n_B = (i N_A) (x) (i N_B) = -N_A (x) N_B.
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int ka = 0; ka < k; ++ka) {
    for (int lb = 0; lb < k; ++lb) {
      h(ka * k + lb, ka * k + lb) = sys.spectrum_a_.energies(ka) + sys.spectrum_b_.energies(lb);
    }
  }
  h -= j_c * Eigen::kroneckerProduct(na, nb);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::numeric, "coupled system: eigen-solver failed");
  }
  sys.vectors_ = solver.eigenvectors();
  sys.energies_ = solver.eigenvalues();

  // Greedy assignment by decreasing overlap yields a bijection even when a
  // few high-lying states are strongly hybridized.
  struct Candidate {
    double overlap;
    int dressed;
    int bare;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(dim) * dim);
  for (int d = 0; d < dim; ++d) {
    for (int b = 0; b < dim; ++b) candidates.push_back({sys.vectors_(b, d) * sys.vectors_(b, d), d, b});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.overlap > y.overlap; });

  sys.label_to_dressed_.assign(dim, -1);
  sys.dressed_to_label_.assign(dim, -1);
  sys.label_overlap_.assign(dim, 0.0);
  int assigned = 0;
  for (const Candidate& c : candidates) {
    if (assigned == dim) break;
    if (sys.dressed_to_label_[c.dressed] != -1 || sys.label_to_dressed_[c.bare] != -1) continue;
    sys.dressed_to_label_[c.dressed] = c.bare;
    sys.label_to_dressed_[c.bare] = c.dressed;
    sys.label_overlap_[c.bare] = c.overlap;
    if (sys.vectors_(c.bare, c.dressed) < 0.0) sys.vectors_.col(c.dressed) *= -1.0;
    ++assigned;
  }
  if (sys.label_overlap_[0] < kMinLabelOverlap) {
    throw Error(ErrorKind::labeling, "coupled system: ground state has no dominant bare label");
  }

  sys.energies_ = sys.energies_.array() - sys.energies_(sys.label_to_dressed_[0]);

  const std::complex<double> i{0.0, 1.0};
  const Eigen::MatrixXd na_full = sys.vectors_.transpose() * Eigen::kroneckerProduct(na, id) * sys.vectors_;
  const Eigen::MatrixXd nb_full = sys.vectors_.transpose() * Eigen::kroneckerProduct(id, nb) * sys.vectors_;
  sys.n_a_full_ = i * na_full.cast<std::complex<double>>();
  sys.n_b_full_ = i * nb_full.cast<std::complex<double>>();
  return sys;
}

int CoupledSystem::index_of(BareLabel label) const {
  if (label.a < 0 || label.b < 0 || label.a >= levels_ || label.b >= levels_) {
    throw Error(ErrorKind::lookup, "coupled system: unknown label " + to_string(label));
  }
  const int bare = bare_index(label);
  if (label_overlap_[bare] < kMinLabelOverlap) {
    throw Error(ErrorKind::labeling, "coupled system: label " + to_string(label) +
                                         " is ambiguous (overlap " +
                                         std::to_string(label_overlap_[bare]) + ")");
  }
  return label_to_dressed_[bare];
}

BareLabel CoupledSystem::label_of(int dressed_index) const {
  if (dressed_index < 0 || dressed_index >= dimension()) {
    throw Error(ErrorKind::lookup, "coupled system: dressed index out of range");
  }
  const int bare = dressed_to_label_[dressed_index];
  return {bare / levels_, bare % levels_};
}

double CoupledSystem::label_overlap(BareLabel label) const {
  if (label.a < 0 || label.b < 0 || label.a >= levels_ || label.b >= levels_) {
    throw Error(ErrorKind::lookup, "coupled system: unknown label " + to_string(label));
  }
  return label_overlap_[bare_index(label)];
}

std::complex<double> CoupledSystem::matrix_element(QubitId q, BareLabel from, BareLabel to) const {
  return charge_operator(q)(index_of(from), index_of(to));
}

double CoupledSystem::zz_rate() const {
  return (energy({1, 1}) - energy({1, 0})) - (energy({0, 1}) - energy({0, 0}));
}

std::vector<int> CoupledSystem::computational_indices() const {
  return {index_of({0, 0}), index_of({0, 1}), index_of({1, 0}), index_of({1, 1})};
}

}  // namespace fluxcnot
