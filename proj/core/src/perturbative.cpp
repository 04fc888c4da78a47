#include "fluxcnot/perturbative.hpp"

#include <cmath>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

namespace {

constexpr double kDegeneracyThreshold = 1e-3;  // GHz
const std::complex<double> kI{0.0, 1.0};

void require_levels(const QubitSpectrum& a, const QubitSpectrum& b) {
  if (a.level_count() < 4 || b.level_count() < 4) {
    throw Error(ErrorKind::truncation, "perturbative: spectra need at least 4 levels each");
  }
}

// Checks w1 - w2 and w1 + w2 against the degeneracy threshold.
void check_pair(double w1, double w2, const char* name) {
  if (std::abs(w1 - w2) < kDegeneracyThreshold || std::abs(w1 + w2) < kDegeneracyThreshold) {
    throw Error(ErrorKind::degeneracy,
                std::string("perturbative: near-degenerate denominator for ") + name);
  }
}

void check_denominators(const QubitSpectrum& a, const QubitSpectrum& b) {
  const double a01 = a.frequency(0, 1), a03 = a.frequency(0, 3), a12 = a.frequency(1, 2);
  const double b01 = b.frequency(0, 1), b03 = b.frequency(0, 3), b12 = b.frequency(1, 2);
  check_pair(a01, b01, "w01_A vs w01_B");
  check_pair(a03, b01, "w03_A vs w01_B");
  check_pair(a12, b01, "w12_A vs w01_B");
  check_pair(a01, b03, "w01_A vs w03_B");
  check_pair(a01, b12, "w01_A vs w12_B");
}

// n^2 w / (w^2 - w_other^2), the generic bracketed term.
double lorentz(double n, double w, double w_other) { return n * n * w / (w * w - w_other * w_other); }

}  // namespace

PerturbativeElements cross_elements_perturbative(const QubitSpectrum& spectrum_a,
                                                 const QubitSpectrum& spectrum_b, double j_c) {
  require_levels(spectrum_a, spectrum_b);
  check_denominators(spectrum_a, spectrum_b);
  const QubitSpectrum& a = spectrum_a;
  const QubitSpectrum& b = spectrum_b;

  PerturbativeElements out;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      for (int kp = 0; kp < 4; ++kp)
        for (int lp = 0; lp < 4; ++lp) out.v[{k, l, kp, lp}] = j_c * a.n(k, l) * b.n(kp, lp);

  const double a01 = a.frequency(0, 1), a03 = a.frequency(0, 3), a12 = a.frequency(1, 2);
  const double b01 = b.frequency(0, 1), b03 = b.frequency(0, 3), b12 = b.frequency(1, 2);

  out.cross_a_00_01 =
      -2.0 * kI * j_c * b.n(0, 1) * (lorentz(a.n(0, 1), a01, b01) + lorentz(a.n(0, 3), a03, b01));
  out.cross_a_10_11 =
      2.0 * kI * j_c * b.n(0, 1) * (lorentz(a.n(0, 1), a01, b01) - lorentz(a.n(1, 2), a12, b01));
  // For n_B the denominators read (w^A_01)^2 - (w^B)^2, i.e. the sign of the
  // generic term flips.
  out.cross_b_00_10 =
      2.0 * kI * j_c * a.n(0, 1) * (-lorentz(b.n(0, 1), b01, a01) - lorentz(b.n(0, 3), b03, a01));
  out.cross_b_01_11 =
      -2.0 * kI * j_c * a.n(0, 1) * (-lorentz(b.n(0, 1), b01, a01) + lorentz(b.n(1, 2), b12, a01));
  return out;
}

std::vector<HybridizationTerm> hybridization_contributions(const QubitSpectrum& spectrum_a,
                                                           const QubitSpectrum& spectrum_b,
                                                           double j_c) {
  require_levels(spectrum_a, spectrum_b);
  check_denominators(spectrum_a, spectrum_b);
  const QubitSpectrum& a = spectrum_a;
  const QubitSpectrum& b = spectrum_b;
  const double a01 = a.frequency(0, 1), a12 = a.frequency(1, 2), b01 = b.frequency(0, 1);
  const std::complex<double> pre = 2.0 * kI * j_c * b.n(0, 1);
  return {
      {"|10>-|01>, |11>-|00>", pre * lorentz(a.n(0, 1), a01, b01)},
      {"|10>-|21>, |11>-|20>", -pre * lorentz(a.n(1, 2), a12, b01)},
  };
}

std::vector<HybridizationTerm> hybridization_contributions_target_a(
    const QubitSpectrum& spectrum_a, const QubitSpectrum& spectrum_b, double j_c) {
  require_levels(spectrum_a, spectrum_b);
  check_denominators(spectrum_a, spectrum_b);
  const QubitSpectrum& a = spectrum_a;
  const QubitSpectrum& b = spectrum_b;
  const double a01 = a.frequency(0, 1), b01 = b.frequency(0, 1), b12 = b.frequency(1, 2);
  const std::complex<double> pre = -2.0 * kI * j_c * a.n(0, 1);
  return {
      {"|01>-|10>, |11>-|00>", pre * -lorentz(b.n(0, 1), b01, a01)},
      {"|01>-|12>, |11>-|02>", pre * lorentz(b.n(1, 2), b12, a01)},
  };
}

}  // namespace fluxcnot
