#pragma once

#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/fluxonium.hpp"

namespace fluxcnot {

/// First-order (in J_C) cross charge matrix elements, keeping hybridization
/// inside the computational subspace and with states where one qubit sits in
/// |2> or |3>.
struct PerturbativeElements {
  /// Interaction elements V_{kl,k'l'} = J_C n^A_kl n^B_k'l' (GHz), keyed by
  /// (k, l, k', l') for k, l, k', l' < 4.
  std::map<std::tuple<int, int, int, int>, double> v;
  std::complex<double> cross_a_00_01;  // <00|n_A|01>
  std::complex<double> cross_a_10_11;  // <10|n_A|11>
  std::complex<double> cross_b_00_10;  // <00|n_B|10>
  std::complex<double> cross_b_01_11;  // <01|n_B|11>
};

/// Throws Error(degeneracy) if any denominator is within 1 MHz of zero and
/// Error(truncation) if a spectrum holds fewer than 4 levels.
PerturbativeElements cross_elements_perturbative(const QubitSpectrum& spectrum_a,
                                                 const QubitSpectrum& spectrum_b, double j_c);

struct HybridizationTerm {
  std::string pairs;           // which hybridized level pairs produce the term
  std::complex<double> value;  // signed contribution to the matrix element
};

/// The two bracketed terms of <10|n_A|11>: the computational-subspace term
/// and the term from |1_A>-|2_A> hybridization.
std::vector<HybridizationTerm> hybridization_contributions(const QubitSpectrum& spectrum_a,
                                                           const QubitSpectrum& spectrum_b,
                                                           double j_c);

/// Same decomposition for <01|n_B|11>, with the roles of the qubits swapped.
std::vector<HybridizationTerm> hybridization_contributions_target_a(
    const QubitSpectrum& spectrum_a, const QubitSpectrum& spectrum_b, double j_c);

}  // namespace fluxcnot
