#include "fluxcnot/optimizer.hpp"

#include <cmath>

#include "fluxcnot/effective_rates.hpp"
#include "fluxcnot/errors.hpp"
#include "fluxcnot/gate_metrics.hpp"
#include "fluxcnot/nelder_mead.hpp"
#include "fluxcnot/parallel.hpp"

namespace fluxcnot {

double pulse_lambda(const CoupledSystem& sys, const PulseSpec& pulse) {
  return lambda_from_drive(sys, pulse.f_peak / area_rescaling_factor(pulse));
}

double peak_amplitude_for_lambda(const CoupledSystem& sys, const PulseSpec& pulse, double lambda) {
  return drive_from_lambda(sys, lambda) * area_rescaling_factor(pulse);
}

PulseSpec initial_guess(const CoupledSystem& sys, double t_gate, const PulseSpec& base) {
  PulseSpec p = base;
  p.t_gate = t_gate;
  p.omega_d = sys.frequency({1, 0}, {1, 1});
  p.eta = eta_sd(sys);
  // Rabi/2pi = 2 f |cross| must equal 1 / (2 t_gate) for a constant envelope.
  const double unit_rabi = rabi_rate_linear(sys, 1.0);
  if (unit_rabi <= 0.0) {
    throw Error(ErrorKind::degeneracy, "initial guess: cross matrix elements vanish");
  }
  const double f_const = 1.0 / (2.0 * t_gate * unit_rabi);
  p.f_peak = f_const * area_rescaling_factor(p);
  p.validate();
  return p;
}

OptimizationResult optimize(const CoupledSystem& sys, const PulseSpec& start,
                            const OptimizerOptions& options) {
  start.validate();
  if (!(start.f_peak > 0.0)) {
    throw Error(ErrorKind::parameter, "optimize: starting amplitude must be positive");
  }
  auto to_pulse = [&](const Eigen::VectorXd& x) {
    PulseSpec p = start;
    p.omega_d = x(0);
    p.f_peak = std::exp(x(1));
    p.eta = x(2);
    return p;
  };
  auto objective = [&](const Eigen::VectorXd& x) { return coherent_error(sys, to_pulse(x)); };

  const Eigen::Vector3d x0{start.omega_d, std::log(start.f_peak), start.eta};
  const double eta_step = std::abs(start.eta) > 1e-6 ? options.eta_rel_step * std::abs(start.eta) : 1e-3;
  const Eigen::Vector3d scales{options.omega_step, options.log_amp_step, eta_step};

  NelderMeadOptions nm;
  nm.max_evaluations = options.max_evaluations;
  nm.f_tolerance = options.tolerance;
  const NelderMeadResult r = nelder_mead(objective, x0, scales, nm);

  OptimizationResult out;
  out.best_pulse = to_pulse(r.x);
  out.best_error = r.f;
  out.evaluations = r.evaluations;
  out.converged = r.converged;
  out.trace.reserve(r.trace.size());
  for (const auto& [x, f] : r.trace) out.trace.push_back({x(0), std::exp(x(1)), x(2), f});
  return out;
}

OptimizationResult optimize(const CoupledSystem& sys, double t_gate, const PulseSpec& base,
                            const OptimizerOptions& options) {
  return optimize(sys, initial_guess(sys, t_gate, base), options);
}

std::vector<OptimizationResult> optimize_sweep(const std::vector<SweepTask>& tasks,
                                               const PulseSpec& base, const SweepOptions& options) {
  for (const SweepTask& t : tasks) {
    if (t.system == nullptr) throw Error(ErrorKind::parameter, "sweep: task without a system");
  }
  std::vector<OptimizationResult> results(tasks.size());

  if (options.warm_start) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const SweepTask& t = tasks[i];
      PulseSpec start = initial_guess(*t.system, t.t_gate, base);
      if (i > 0) {
        const PulseSpec& prev = results[i - 1].best_pulse;
        start.omega_d = prev.omega_d;
        start.eta = prev.eta;
        start.f_peak = prev.f_peak * prev.t_gate / t.t_gate;
      }
      results[i] = optimize(*t.system, start, options.optimizer);
    }
    return results;
  }

  parallel_for(tasks.size(), options.parallelism, [&](std::size_t i) {
    results[i] = optimize(*tasks[i].system, tasks[i].t_gate, base, options.optimizer);
  });
  return results;
}

}  // namespace fluxcnot
