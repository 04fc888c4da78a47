#include "fluxcnot/fluxonium.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fluxcnot/errors.hpp"

namespace fluxcnot {
namespace {

using testing::qubit_a;
using testing::qubit_b;

TEST(PhaseFunctions, MatchDenseFunctionOfPhaseOperator) {
  const double zpf = qubit_a().phase_zpf();
  const PhaseFunctions pf = phase_functions(60, zpf);
  const Eigen::MatrixXd cos_ref =
      testing::function_of_phase(400, 30, zpf, [](double x) { return std::cos(x); });
  const Eigen::MatrixXd sin_ref =
      testing::function_of_phase(400, 30, zpf, [](double x) { return std::sin(x); });
  EXPECT_LT((pf.cos_phi.topLeftCorner(30, 30) - cos_ref).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((pf.sin_phi.topLeftCorner(30, 30) - sin_ref).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PhaseFunctions, ParityStructure) {
  const PhaseFunctions pf = phase_functions(40, 0.9);
  for (int m = 0; m < 40; ++m) {
    for (int n = 0; n < 40; ++n) {
      if ((m + n) % 2 == 1) EXPECT_EQ(pf.cos_phi(m, n), 0.0);
      if ((m + n) % 2 == 0) EXPECT_EQ(pf.sin_phi(m, n), 0.0);
    }
  }
  EXPECT_LT((pf.cos_phi - pf.cos_phi.transpose()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((pf.sin_phi - pf.sin_phi.transpose()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Hamiltonian, RealSymmetricAwayFromSweetSpot) {
  FluxoniumSpec spec = qubit_a();
  spec.phi_ext = 0.3 * std::numbers::pi;
  spec.basis_size = 40;
  const Eigen::MatrixXd h = build_hamiltonian(spec);
  EXPECT_EQ(h.rows(), 40);
  EXPECT_LT((h - h.transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Hamiltonian, RejectsInvalidParameters) {
  FluxoniumSpec spec = qubit_a();
  spec.e_c = 0.0;
  EXPECT_THROW(build_hamiltonian(spec), Error);
  spec = qubit_a();
  spec.e_l = -1.0;
  EXPECT_THROW(spec.validate(), Error);
  spec = qubit_a();
  spec.e_j = -0.1;
  EXPECT_THROW(spec.validate(), Error);
  spec = qubit_a();
  spec.basis_size = 10;
  try {
    spec.validate();
    FAIL() << "expected a parameter error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parameter);
  }
}

TEST(Diagonalize, HarmonicLimit) {
  FluxoniumSpec spec{0.8, 1.3, 0.0};
  spec.basis_size = 60;
  const QubitSpectrum s = diagonalize(spec, 6);
  const double plasma = std::sqrt(8.0 * spec.e_l * spec.e_c);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(s.energies(k), k * plasma, 1e-10);
  EXPECT_NEAR(std::abs(s.n(0, 1)), std::pow(spec.e_l / (32.0 * spec.e_c), 0.25), 1e-12);
  EXPECT_NEAR(std::abs(s.n(0, 1)), spec.charge_zpf(), 1e-12);
}

TEST(Diagonalize, SelectionRuleAtSweetSpot) {
  for (const FluxoniumSpec& spec : {qubit_a(), qubit_b()}) {
    const QubitSpectrum s = diagonalize(spec, 6);
    for (int k = 0; k < 6; ++k) {
      for (int l = 0; l < 6; ++l) {
        if ((k + l) % 2 == 0) EXPECT_LT(std::abs(s.n(k, l)), 1e-10) << k << l;
      }
    }
  }
}

TEST(Diagonalize, ChargeElementsAntisymmetricAndEnergiesAscending) {
  const QubitSpectrum s = diagonalize(qubit_b(), 8);
  EXPECT_LT((s.n_elements + s.n_elements.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(s.energies(0), 0.0);
  for (int k = 1; k < 8; ++k) EXPECT_GT(s.energies(k), s.energies(k - 1));
}

TEST(Diagonalize, BasisConverged) {
  for (FluxoniumSpec spec : {qubit_a(), qubit_b()}) {
    const QubitSpectrum s100 = diagonalize(spec, 6);
    spec.basis_size = 140;
    const QubitSpectrum s140 = diagonalize(spec, 6);
    EXPECT_LT((s100.energies - s140.energies).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((s100.n_elements.cwiseAbs() - s140.n_elements.cwiseAbs()).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Diagonalize, DeviceSpectra) {
  // Published two-decimal values for the two devices.
  const QubitSpectrum a = diagonalize(qubit_a(), 4);
  EXPECT_NEAR(a.frequency(0, 1), 0.53, 0.01);
  EXPECT_NEAR(a.frequency(1, 2), 3.80, 0.01);
  EXPECT_NEAR(a.frequency(0, 3), 7.03, 0.01);
  EXPECT_NEAR(std::abs(a.n(0, 1)), 0.14, 0.01);
  EXPECT_NEAR(std::abs(a.n(1, 2)), 0.58, 0.01);
  EXPECT_NEAR(std::abs(a.n(0, 3)), 0.41, 0.01);

  const QubitSpectrum b = diagonalize(qubit_b(), 4);
  EXPECT_NEAR(b.frequency(0, 1), 1.02, 0.01);
  EXPECT_NEAR(b.frequency(1, 2), 3.75, 0.01);
  EXPECT_NEAR(std::abs(b.n(0, 1)), 0.22, 0.01);
  EXPECT_NEAR(std::abs(b.n(1, 2)), 0.63, 0.01);
  EXPECT_NEAR(std::abs(b.n(0, 3)), 0.32, 0.01);
  // omega_03 of qubit B is checked by the acceptance suite.

  EXPECT_GT(std::abs(b.n(0, 1)), std::abs(a.n(0, 1)));
}

TEST(Diagonalize, SignConventionDeterministic) {
  const QubitSpectrum s1 = diagonalize(qubit_a(), 5);
  const QubitSpectrum s2 = diagonalize(qubit_a(), 5);
  EXPECT_EQ((s1.n_elements - s2.n_elements).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Diagonalize, TruncationGuard) {
  FluxoniumSpec spec = qubit_a();
  spec.basis_size = 20;
  EXPECT_NO_THROW(diagonalize(spec, 10));
  try {
    diagonalize(spec, 11);
    FAIL() << "expected a truncation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::truncation);
  }
}

}  // namespace
}  // namespace fluxcnot
