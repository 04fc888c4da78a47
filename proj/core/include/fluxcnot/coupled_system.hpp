#pragma once

#include <complex>
#include <compare>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fluxcnot/fluxonium.hpp"

namespace fluxcnot {

/// Bare product label |k_A l_B>.
struct BareLabel {
  int a = 0;
  int b = 0;
  auto operator<=>(const BareLabel&) const = default;
};

std::string to_string(BareLabel label);

enum class QubitId { a, b };

/// Two capacitively coupled fluxoniums, diagonalized in the product basis of
/// their lowest `levels_per_qubit` eigenstates.
///
/// Dressed states are indexed in ascending energy. Labels form a bijection
/// assigned greedily by decreasing |overlap|^2 with bare product states, and
/// each dressed vector is signed so that the overlap with its own label is
/// positive. Looking up a label whose overlap is below 0.5 throws
/// Error(labeling). Energies are in GHz with the |00> state at 0.
class CoupledSystem {
 public:
  static CoupledSystem assemble(const FluxoniumSpec& spec_a, const FluxoniumSpec& spec_b,
                                double j_c, int levels_per_qubit = 5);

  /// Builds from precomputed spectra; each must hold at least levels_per_qubit levels.
  static CoupledSystem from_spectra(const QubitSpectrum& spectrum_a,
                                    const QubitSpectrum& spectrum_b, double j_c,
                                    int levels_per_qubit = 5);

  const QubitSpectrum& spectrum_a() const { return spectrum_a_; }
  const QubitSpectrum& spectrum_b() const { return spectrum_b_; }
  const QubitSpectrum& spectrum(QubitId q) const {
    return q == QubitId::a ? spectrum_a_ : spectrum_b_;
  }
  double j_c() const { return j_c_; }
  int levels_per_qubit() const { return levels_; }
  int dimension() const { return levels_ * levels_; }

  /// Dressed energies in ascending order (index = dressed index).
  const Eigen::VectorXd& dressed_energies() const { return energies_; }
  /// Columns are dressed states expressed in the bare product basis, where
  /// product state (k, l) has index k * levels_per_qubit + l.
  const Eigen::MatrixXd& dressed_vectors() const { return vectors_; }

  int bare_index(BareLabel label) const { return label.a * levels_ + label.b; }
  int index_of(BareLabel label) const;
  BareLabel label_of(int dressed_index) const;
  /// |<bare label|dressed state>|^2 for the state carrying this label.
  double label_overlap(BareLabel label) const;
  double energy(BareLabel label) const { return energies_(index_of(label)); }
  /// Dressed transition frequency E(to) - E(from) in GHz.
  double frequency(BareLabel from, BareLabel to) const { return energy(to) - energy(from); }

  /// Charge operator n_A (x) 1 or 1 (x) n_B in the dressed basis.
  const Eigen::MatrixXcd& charge_operator(QubitId q) const {
    return q == QubitId::a ? n_a_full_ : n_b_full_;
  }
  /// <from| n_q |to> in the dressed basis. Throws Error(lookup) on labels
  /// outside the retained levels.
  std::complex<double> matrix_element(QubitId q, BareLabel from, BareLabel to) const;

  /// Static ZZ rate [E(11) - E(10)] - [E(01) - E(00)] in GHz.
  double zz_rate() const;

  /// Dressed indices of |00>, |01>, |10>, |11> in that order.
  std::vector<int> computational_indices() const;

 private:
  CoupledSystem() = default;

  QubitSpectrum spectrum_a_;
  QubitSpectrum spectrum_b_;
  double j_c_ = 0.0;
  int levels_ = 0;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
  std::vector<int> label_to_dressed_;
  std::vector<int> dressed_to_label_;
  std::vector<double> label_overlap_;
  Eigen::MatrixXcd n_a_full_;
  Eigen::MatrixXcd n_b_full_;
};

}  // namespace fluxcnot
