#pragma once

#include <cmath>
#include <functional>

#include <Eigen/Dense>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/fluxonium.hpp"
#include "fluxcnot/pulse.hpp"

namespace fluxcnot::testing {

// Device parameters used throughout the suite (GHz).
inline FluxoniumSpec qubit_a() { return {1.06, 1.09, 4.62}; }
inline FluxoniumSpec qubit_b() { return {1.03, 1.88, 5.05}; }
inline constexpr double kCoupling = 0.35;

inline CoupledSystem device(double j_c = kCoupling, int levels = 5) {
  return CoupledSystem::assemble(qubit_a(), qubit_b(), j_c, levels);
}

// A calibrated 50 ns gate for device(); only used as an input.
inline PulseSpec calibrated_pulse() {
  PulseSpec p;
  p.omega_d = 1.0131371996009;
  p.f_peak = 0.655678201179224;
  p.eta = 0.0113901743321216;
  p.t_gate = 50.0;
  p.dt = 1e-3;
  return p;
}

// Composite trapezoid rule on n uniform intervals.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) sum += f(a + i * h);
  return sum * h;
}

// g(x) for x = zpf (a + a^dag), evaluated by diagonalizing x in a large
// oscillator basis and truncated to the leading `keep` states.
inline Eigen::MatrixXd function_of_phase(int big, int keep, double zpf,
                                         const std::function<double(double)>& g) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(big, big);
  for (int n = 1; n < big; ++n) x(n - 1, n) = x(n, n - 1) = zpf * std::sqrt(static_cast<double>(n));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(x);
  Eigen::VectorXd gv = eig.eigenvalues().unaryExpr(g);
  const Eigen::MatrixXd full = eig.eigenvectors() * gv.asDiagonal() * eig.eigenvectors().transpose();
  return full.topLeftCorner(keep, keep);
}

// Least-squares slope of log|y| against log x.
inline double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace fluxcnot::testing
