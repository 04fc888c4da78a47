#include "fluxcnot/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace fluxcnot {
namespace {

using testing::calibrated_pulse;
using testing::device;

PulseSpec at_step(double dt) {
  PulseSpec p = calibrated_pulse();
  p.dt = dt;
  return p;
}

TEST(Dynamics, PropagatorIsUnitary) {
  const CoupledSystem sys = device();
  const Eigen::MatrixXcd u = propagate(sys, at_step(2e-3));
  ASSERT_EQ(u.rows(), 25);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(25, 25);
  EXPECT_LT((u.adjoint() * u - id).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Dynamics, UndrivenEvolutionIsDynamicalPhase) {
  const CoupledSystem sys = device();
  PulseSpec p = at_step(5e-3);
  p.f_peak = 0.0;
  const Eigen::MatrixXcd u = propagate(sys, p);
  const DrivenPropagator prop(sys, p);
  const double t = prop.steps() * prop.step();
  EXPECT_NEAR(t, p.t_gate, 1e-12);
  for (int i = 0; i < 25; ++i) {
    const std::complex<double> expected =
        std::exp(std::complex<double>(0.0, -2.0 * std::numbers::pi * sys.dressed_energies()(i) * t));
    EXPECT_LT(std::abs(u(i, i) - expected), 1e-9);
  }
  EXPECT_LT((u - Eigen::MatrixXcd(u.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Dynamics, SecondOrderInStep) {
  const CoupledSystem sys = device();
  const Eigen::MatrixXcd ref = propagate_computational(sys, at_step(2.5e-4));
  const double e_coarse = (propagate_computational(sys, at_step(4e-3)) - ref).norm();
  const double e_fine = (propagate_computational(sys, at_step(2e-3)) - ref).norm();
  // Halving dt should cut the error by about four (reference error included).
  EXPECT_GT(e_coarse / e_fine, 3.5);
  EXPECT_LT(e_coarse / e_fine, 4.6);
}

TEST(Dynamics, PopulationsConservedAndLeakageSmall) {
  const CoupledSystem sys = device();
  const std::vector<PopulationTrace> traces = population_traces(sys, at_step(2e-3), 0.5);
  ASSERT_EQ(traces.size(), 4u);
  EXPECT_EQ(traces[0].initial, (BareLabel{0, 0}));
  EXPECT_EQ(traces[3].initial, (BareLabel{1, 1}));
  for (const PopulationTrace& tr : traces) {
    ASSERT_EQ(static_cast<std::size_t>(tr.probabilities.rows()), tr.times.size());
    EXPECT_NEAR(tr.times.front(), 0.0, 1e-12);
    EXPECT_NEAR(tr.times.back(), 50.0, 1e-9);
    for (Eigen::Index r = 0; r < tr.probabilities.rows(); ++r) {
      EXPECT_NEAR(tr.probabilities.row(r).sum(), 1.0, 1e-9);
    }
  }
  const Eigen::RowVectorXd end = traces[2].probabilities.bottomRows(1);
  EXPECT_LT(end(sys.index_of({2, 0})), 1e-3);
  EXPECT_LT(end(sys.index_of({2, 1})), 1e-3);
  EXPECT_GT(end(sys.index_of({1, 1})), 0.99);
}

}  // namespace
}  // namespace fluxcnot
