#include "fluxcnot/perturbative.hpp"

#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/errors.hpp"

namespace fluxcnot {
namespace {

using testing::qubit_a;
using testing::qubit_b;

constexpr BareLabel k00{0, 0}, k01{0, 1}, k10{1, 0}, k11{1, 1};

struct Elements {
  std::complex<double> a_00_01, a_10_11, b_00_10, b_01_11;
};

// Exact diagonalization restricted to the same four levels per qubit.
Elements exact_elements(double j_c) {
  const CoupledSystem sys = CoupledSystem::assemble(qubit_a(), qubit_b(), j_c, 4);
  return {sys.matrix_element(QubitId::a, k00, k01), sys.matrix_element(QubitId::a, k10, k11),
          sys.matrix_element(QubitId::b, k00, k10), sys.matrix_element(QubitId::b, k01, k11)};
}

Elements first_order(double j_c) {
  const PerturbativeElements p =
      cross_elements_perturbative(diagonalize(qubit_a(), 4), diagonalize(qubit_b(), 4), j_c);
  return {p.cross_a_00_01, p.cross_a_10_11, p.cross_b_00_10, p.cross_b_01_11};
}

double worst_relative_error(double j_c) {
  const Elements e = exact_elements(j_c);
  const Elements p = first_order(j_c);
  return std::max({std::abs(e.a_00_01 - p.a_00_01) / std::abs(e.a_00_01),
                   std::abs(e.a_10_11 - p.a_10_11) / std::abs(e.a_10_11),
                   std::abs(e.b_00_10 - p.b_00_10) / std::abs(e.b_00_10),
                   std::abs(e.b_01_11 - p.b_01_11) / std::abs(e.b_01_11)});
}

TEST(Perturbative, VanishesWithoutCoupling) {
  const Elements p = first_order(0.0);
  EXPECT_EQ(std::abs(p.a_00_01), 0.0);
  EXPECT_EQ(std::abs(p.a_10_11), 0.0);
  EXPECT_EQ(std::abs(p.b_00_10), 0.0);
  EXPECT_EQ(std::abs(p.b_01_11), 0.0);
}

TEST(Perturbative, LinearInCoupling) {
  const Elements p1 = first_order(0.1);
  const Elements p3 = first_order(0.3);
  EXPECT_NEAR(std::abs(p3.a_10_11 - 3.0 * p1.a_10_11), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(p3.b_01_11 - 3.0 * p1.b_01_11), 0.0, 1e-14);
}

TEST(Perturbative, PurelyImaginary) {
  const Elements p = first_order(0.35);
  for (auto z : {p.a_00_01, p.a_10_11, p.b_00_10, p.b_01_11}) {
    EXPECT_EQ(z.real(), 0.0);
    EXPECT_NE(z.imag(), 0.0);
  }
}

TEST(Perturbative, MatchesExactDiagonalizationAtWeakCoupling) {
  EXPECT_LT(worst_relative_error(0.05), 0.05);
}

TEST(Perturbative, ResidualShrinksWithCoupling) {
  const double coarse = worst_relative_error(0.05);
  const double fine = worst_relative_error(0.025);
  EXPECT_LE(fine, 0.5 * coarse * 1.05);
}

TEST(Perturbative, InteractionElementsFollowProductForm) {
  const QubitSpectrum a = diagonalize(qubit_a(), 4);
  const QubitSpectrum b = diagonalize(qubit_b(), 4);
  const PerturbativeElements p = cross_elements_perturbative(a, b, 0.35);
  EXPECT_NEAR(p.v.at({1, 2, 0, 1}), 0.35 * a.n(1, 2) * b.n(0, 1), 1e-15);
  EXPECT_NEAR(p.v.at({0, 3, 1, 2}), 0.35 * a.n(0, 3) * b.n(1, 2), 1e-15);
}

TEST(Perturbative, ControlElementDominates) {
  const Elements p = first_order(0.35);
  const double largest = std::abs(p.a_10_11);
  EXPECT_GT(largest, std::abs(p.a_00_01));
  EXPECT_GT(largest, std::abs(p.b_00_10));
  EXPECT_GT(largest, std::abs(p.b_01_11));
}

TEST(Perturbative, HybridizationTermsAddForTargetB) {
  const QubitSpectrum a = diagonalize(qubit_a(), 4);
  const QubitSpectrum b = diagonalize(qubit_b(), 4);
  const auto terms_b = hybridization_contributions(a, b, 0.35);
  ASSERT_EQ(terms_b.size(), 2u);
  EXPECT_GT(terms_b[0].value.imag() * terms_b[1].value.imag(), 0.0);

  const auto terms_a = hybridization_contributions_target_a(a, b, 0.35);
  ASSERT_EQ(terms_a.size(), 2u);
  EXPECT_LT(terms_a[0].value.imag() * terms_a[1].value.imag(), 0.0);

  const PerturbativeElements p = cross_elements_perturbative(a, b, 0.35);
  EXPECT_NEAR(std::abs(terms_b[0].value + terms_b[1].value - p.cross_a_10_11), 0.0, 1e-14);
}

TEST(Perturbative, RejectsDegenerateAndTruncatedSpectra) {
  const QubitSpectrum a = diagonalize(qubit_a(), 4);
  try {
    cross_elements_perturbative(a, a, 0.1);
    FAIL() << "expected a degeneracy error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degeneracy);
  }
  const QubitSpectrum short_b = diagonalize(qubit_b(), 3);
  try {
    cross_elements_perturbative(a, short_b, 0.1);
    FAIL() << "expected a truncation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::truncation);
  }
}

}  // namespace
}  // namespace fluxcnot
