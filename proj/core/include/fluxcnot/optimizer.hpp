#pragma once

#include <vector>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/pulse.hpp"

namespace fluxcnot {

struct OptimizerOptions {
  int max_evaluations = 500;
  double tolerance = 1e-8;
  double omega_step = 1e-3;     // GHz (1 MHz)
  double log_amp_step = 0.05;   // 5 % of the amplitude
  double eta_rel_step = 0.1;    // 10 % of eta
};

struct OptimizationTracePoint {
  double omega_d = 0.0;
  double f_peak = 0.0;
  double eta = 0.0;
  double error = 0.0;
};

struct OptimizationResult {
  PulseSpec best_pulse;
  double best_error = 1.0;
  int evaluations = 0;
  std::vector<OptimizationTracePoint> trace;
  bool converged = false;
};

/// lambda of the constant drive with the same area as the pulse envelope.
double pulse_lambda(const CoupledSystem& sys, const PulseSpec& pulse);

/// Peak amplitude giving `pulse` the area-equivalent lambda.
double peak_amplitude_for_lambda(const CoupledSystem& sys, const PulseSpec& pulse, double lambda);

/// Starting point for calibration: drive at the dressed |10>-|11> frequency,
/// darkening eta, and the peak amplitude whose linear-order Rabi frequency
/// gives a pi rotation in t_gate after rescaling for the envelope area.
/// Envelope kind, sigma and dt are taken from `base`.
PulseSpec initial_guess(const CoupledSystem& sys, double t_gate, const PulseSpec& base = {});

/// Nelder-Mead over (omega_d, log f_peak, eta) minimizing 1 - F_coherent at
/// the pulse's dt. Never returns a point worse than `start`.
OptimizationResult optimize(const CoupledSystem& sys, const PulseSpec& start,
                            const OptimizerOptions& options = {});

/// initial_guess followed by optimize.
OptimizationResult optimize(const CoupledSystem& sys, double t_gate, const PulseSpec& base = {},
                            const OptimizerOptions& options = {});

struct SweepTask {
  const CoupledSystem* system = nullptr;
  double t_gate = 50.0;
};

struct SweepOptions {
  /// Start each point from the previous optimum (amplitude rescaled by the
  /// ratio of gate durations). Warm-started sweeps run sequentially.
  bool warm_start = false;
  int parallelism = 1;
  OptimizerOptions optimizer;
};

/// Re-optimizes every task independently (cold) or in order (warm).
std::vector<OptimizationResult> optimize_sweep(const std::vector<SweepTask>& tasks,
                                               const PulseSpec& base,
                                               const SweepOptions& options = {});

}  // namespace fluxcnot
