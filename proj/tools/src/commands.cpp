#include "commands.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "fluxcnot/coupled_system.hpp"
#include "fluxcnot/effective_rates.hpp"
#include "fluxcnot/gate_metrics.hpp"
#include "fluxcnot/optimizer.hpp"
#include "fluxcnot/parallel.hpp"
#include "fluxcnot/process_tomography.hpp"

namespace fluxcnot::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Scenario {
  const char* column;
  DissipationSpec spec;
};

// Relaxation scenarios reported by dissipative sweeps.
const Scenario kScenarios[] = {
    {"error_t1_100us_1us_dimless", {100.0, 1.0}},
    {"error_t1_100us_inf_dimless", {100.0, kInf}},
    {"error_t1_500us_50us_dimless", {500.0, 50.0}},
};

CoupledSystem build_system(const RunConfig& c, double j_c) {
  return CoupledSystem::assemble(c.qubit_a, c.qubit_b, j_c, c.levels);
}

PulseSpec base_pulse(const RunConfig& c, double t_gate) {
  PulseSpec p;
  p.t_gate = t_gate;
  p.sigma = c.pulse.sigma;
  p.envelope_kind = c.pulse.envelope;
  p.dt = c.pulse.dt;
  return p;
}

// Configured pulse with unset fields taken from the calibration guess.
PulseSpec configured_pulse(const RunConfig& c, const CoupledSystem& sys) {
  PulseSpec p = initial_guess(sys, c.pulse.t_gate, base_pulse(c, c.pulse.t_gate));
  if (c.pulse.omega_d) p.omega_d = *c.pulse.omega_d;
  if (c.pulse.f_peak) p.f_peak = *c.pulse.f_peak;
  if (c.pulse.eta) p.eta = *c.pulse.eta;
  p.validate();
  return p;
}

const std::vector<std::string> kPulseColumns = {"t_gate_ns",   "j_c_GHz",   "omega_d_GHz",
                                                "f_peak_GHz",  "eta_dimless", "lambda_dimless"};

const std::vector<std::string> kGateColumns = {
    "dt_ns",           "coherent_error_dimless", "target_c0_dimless", "target_c1_dimless",
    "control_dimless", "leakage_dimless",        "budget_sum_dimless"};

std::vector<Cell> pulse_cells(const CoupledSystem& sys, const PulseSpec& p) {
  return {p.t_gate, sys.j_c(), p.omega_d, p.f_peak, p.eta, pulse_lambda(sys, p)};
}

std::vector<Cell> gate_cells(const GateReport& r) {
  return {r.dt_used,           r.error(),         r.budget.target_c0, r.budget.target_c1,
          r.budget.control,    r.budget.leakage,  r.budget.total()};
}

template <typename... Parts>
std::vector<std::string> concat(const Parts&... parts) {
  std::vector<std::string> out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

void append(std::vector<Cell>& row, std::vector<Cell> more) {
  row.insert(row.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

ojson virtual_z_json(const VirtualZPhases& z) {
  return {{"phi_00_rad", z.phi_00}, {"phi_1_rad", z.phi_1}, {"phi_2_rad", z.phi_2}, {"phi_3_rad", z.phi_3}};
}

ojson matrix_json(const Eigen::Matrix4cd& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < 4; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string digits(BareLabel l) { return std::to_string(l.a) + std::to_string(l.b); }

std::vector<std::pair<std::string, Table>> population_tables(
    const CoupledSystem& sys, const std::vector<PopulationTrace>& traces) {
  const BareLabel tracked[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {0, 2}, {1, 2}};
  std::vector<int> idx;
  for (const BareLabel& l : tracked) idx.push_back(sys.index_of(l));

  std::vector<std::pair<std::string, Table>> out;
  for (const PopulationTrace& trace : traces) {
    Table t;
    t.columns = {"t_ns"};
    for (const BareLabel& l : tracked) t.columns.push_back("P_" + digits(l));
    t.columns.push_back("leak_other");
    for (std::size_t s = 0; s < trace.times.size(); ++s) {
      const auto probs = trace.probabilities.row(static_cast<Eigen::Index>(s));
      std::vector<Cell> row{trace.times[s]};
      double tracked_sum = 0.0;
      for (int k : idx) {
        row.emplace_back(probs(k));
        tracked_sum += probs(k);
      }
      row.emplace_back(std::max(0.0, probs.sum() - tracked_sum));
      t.add_row(std::move(row));
    }
    out.emplace_back(digits(trace.initial), std::move(t));
  }
  return out;
}

std::vector<Cell> dissipative_cells(const CoupledSystem& sys, const PulseSpec& pulse) {
  std::vector<Cell> cells;
  for (const Scenario& s : kScenarios) {
    cells.emplace_back(simulate_dissipative_gate(sys, pulse, s.spec).error());
  }
  return cells;
}

std::vector<std::string> dissipative_columns() {
  std::vector<std::string> cols;
  for (const Scenario& s : kScenarios) cols.emplace_back(s.column);
  return cols;
}

}  // namespace

CommandResult run_spectrum(const RunConfig& c) {
  CommandResult result{"spectrum", {}, {}, ojson::object()};
  result.table.columns = {"qubit",       "omega_01_GHz", "omega_12_GHz", "omega_03_GHz",
                          "n_01_dimless", "n_12_dimless", "n_03_dimless"};
  const int keep = std::max(c.levels, 4);
  for (const auto& [name, spec] : {std::pair{"A", c.qubit_a}, std::pair{"B", c.qubit_b}}) {
    const QubitSpectrum s = diagonalize(spec, keep);
    result.table.add_row({std::string(name), s.frequency(0, 1), s.frequency(1, 2), s.frequency(0, 3),
                          std::abs(s.n(0, 1)), std::abs(s.n(1, 2)), std::abs(s.n(0, 3))});
  }
  return result;
}

CommandResult run_rates(const RunConfig& c) {
  CommandResult result{"rates", {}, {}, ojson::object()};
  result.table.columns = {"j_c_GHz",        "f_GHz",       "lambda_dimless", "eta_dimless",
                          "xi_zx_MHz",      "xi_ix_MHz",   "xi_zz_MHz",      "rabi_10_11_MHz",
                          "lambda_12_dimless", "t_fsl_ns"};

  if (c.sweep && (c.sweep->parameter == SweepParameter::t_gate ||
                  c.sweep->parameter == SweepParameter::omega_d)) {
    throw Error(ErrorKind::parse, std::string("rates: cannot sweep ") + to_string(c.sweep->parameter) +
                                      "; use j_c or lambda");
  }
  const double base_lambda = c.rates.lambda.value_or(0.2);
  auto row = [&](double j_c, std::optional<double> lambda) {
    const CoupledSystem sys = build_system(c, j_c);
    const double f = lambda ? drive_from_lambda(sys, *lambda)
                            : c.rates.f ? *c.rates.f : drive_from_lambda(sys, base_lambda);
    const double eta = c.rates.eta ? *c.rates.eta : eta_sd(sys);
    const EffectiveRates r = effective_hamiltonian_rates(sys, f, eta);
    result.table.add_row({j_c, f, r.lambda_, eta, 1e3 * r.xi_zx, 1e3 * r.xi_ix, 1e3 * r.xi_zz,
                          1e3 * r.omega_rabi_10_11, r.lambda_12, r.t_fsl});
  };

  if (!c.sweep) {
    row(c.j_c, std::nullopt);
  } else if (c.sweep->parameter == SweepParameter::j_c) {
    for (double j : c.sweep->values) row(j, std::nullopt);
  } else {
    for (double v : c.sweep->values) row(c.j_c, c.sweep->relative ? v * base_lambda : v);
  }
  return result;
}

CommandResult run_simulate(const RunConfig& c, const CommandOptions& options) {
  const CoupledSystem sys = build_system(c, c.j_c);
  const PulseSpec pulse = configured_pulse(c, sys);
  SimulationOptions sim;
  sim.record_populations = options.timeseries;
  const GateReport report = simulate_gate(sys, pulse, sim);

  CommandResult result{"simulate", {}, {}, ojson::object()};
  result.table.columns = concat(kPulseColumns, kGateColumns);
  std::vector<Cell> row = pulse_cells(sys, pulse);
  append(row, gate_cells(report));

  if (c.dissipation) {
    DissipativeOptions dopt;
    dopt.parallelism = options.parallelism;
    const DissipativeReport d = simulate_dissipative_gate(sys, pulse, *c.dissipation, dopt);
    for (const char* col : {"dissipative_error_dimless", "process_fidelity_dimless",
                            "trace_deficit_dimless", "dissipative_dt_ns"}) {
      result.table.columns.emplace_back(col);
    }
    append(row, {d.error(), d.process_fidelity, d.chi.trace_deficit, d.dt_used});
  }
  result.table.add_row(std::move(row));

  result.extra["virtual_z"] = virtual_z_json(report.phases);
  result.extra["u_corrected"] = matrix_json(report.u_corrected);
  if (options.timeseries) result.timeseries = population_tables(sys, report.populations);
  return result;
}

CommandResult run_optimize(const RunConfig& c, const CommandOptions&) {
  const CoupledSystem sys = build_system(c, c.j_c);
  PulseSpec start = initial_guess(sys, c.pulse.t_gate, base_pulse(c, c.pulse.t_gate));
  if (c.optimize_from_pulse) {
    if (!c.pulse.complete()) {
      throw Error(ErrorKind::parse, "config: optimizer.start = \"pulse\" needs omega_d, f_peak and eta");
    }
    start = configured_pulse(c, sys);
  }
  const double start_error = coherent_error(sys, start);
  const OptimizationResult opt = optimize(sys, start, c.optimizer);

  CommandResult result{"optimize", {}, {}, ojson::object()};
  result.table.columns = concat(kPulseColumns, std::vector<std::string>{
                                                   "error_dimless", "start_error_dimless",
                                                   "evaluations_count", "converged_flag"});
  std::vector<Cell> row = pulse_cells(sys, opt.best_pulse);
  append(row, {opt.best_error, start_error, static_cast<std::int64_t>(opt.evaluations),
               static_cast<std::int64_t>(opt.converged)});
  result.table.add_row(std::move(row));

  Table trace;
  trace.columns = {"omega_d_GHz", "f_peak_GHz", "eta_dimless", "error_dimless"};
  for (const auto& t : opt.trace) trace.add_row({t.omega_d, t.f_peak, t.eta, t.error});
  result.extra["trace"] = records(trace);
  return result;
}

CommandResult run_sweep(const RunConfig& c, const CommandOptions& options) {
  if (!c.sweep) throw Error(ErrorKind::parse, "config: sweep: missing required field");
  const SweepAxis& axis = *c.sweep;
  const std::size_t n = axis.values.size();

  CommandResult result{"sweep", {}, {}, ojson::object()};
  result.table.columns = concat(kPulseColumns, kGateColumns,
                                std::vector<std::string>{"evaluations_count", "converged_flag"});
  if (axis.dissipative) {
    const auto extra = dissipative_columns();
    result.table.columns.insert(result.table.columns.end(), extra.begin(), extra.end());
  }

  // Systems per point; omega_d and lambda sweeps share one.
  std::vector<std::shared_ptr<const CoupledSystem>> systems(n);
  if (axis.parameter == SweepParameter::j_c) {
    for (std::size_t i = 0; i < n; ++i) {
      systems[i] = std::make_shared<const CoupledSystem>(build_system(c, axis.values[i]));
    }
  } else {
    const auto shared = std::make_shared<const CoupledSystem>(build_system(c, c.j_c));
    std::fill(systems.begin(), systems.end(), shared);
  }

  std::vector<PulseSpec> pulses(n);
  std::vector<int> evaluations(n, 0);
  std::vector<bool> converged(n, true);

  if (axis.parameter == SweepParameter::t_gate || axis.parameter == SweepParameter::j_c) {
    std::vector<SweepTask> tasks(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t_gate = axis.parameter == SweepParameter::t_gate ? axis.values[i] : c.pulse.t_gate;
      tasks[i] = {systems[i].get(), t_gate};
    }
    SweepOptions sweep_options;
    sweep_options.warm_start = axis.warm_start;
    sweep_options.parallelism = options.parallelism;
    sweep_options.optimizer = c.optimizer;
    const std::vector<OptimizationResult> opt = optimize_sweep(tasks, base_pulse(c, c.pulse.t_gate), sweep_options);
    for (std::size_t i = 0; i < n; ++i) {
      pulses[i] = opt[i].best_pulse;
      evaluations[i] = opt[i].evaluations;
      converged[i] = opt[i].converged;
    }
  } else {
    const CoupledSystem& sys = *systems.front();
    PulseSpec center;
    if (c.pulse.complete()) {
      center = configured_pulse(c, sys);
    } else {
      const OptimizationResult opt = optimize(sys, c.pulse.t_gate, base_pulse(c, c.pulse.t_gate), c.optimizer);
      center = opt.best_pulse;
      result.extra["center_evaluations"] = opt.evaluations;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double v = axis.values[i];
      pulses[i] = center;
      if (axis.parameter == SweepParameter::omega_d) {
        pulses[i].omega_d = axis.relative ? center.omega_d + v : v;
      } else {
        pulses[i].f_peak = axis.relative ? center.f_peak * v : peak_amplitude_for_lambda(sys, center, v);
      }
    }
  }

  std::vector<std::vector<Cell>> rows(n);
  parallel_for(n, options.parallelism, [&](std::size_t i) {
    const CoupledSystem& sys = *systems[i];
    const GateReport report = simulate_gate(sys, pulses[i]);
    std::vector<Cell> row = pulse_cells(sys, pulses[i]);
    append(row, gate_cells(report));
    append(row, {static_cast<std::int64_t>(evaluations[i]), static_cast<std::int64_t>(converged[i])});
    if (axis.dissipative) append(row, dissipative_cells(sys, pulses[i]));
    rows[i] = std::move(row);
  });
  for (auto& row : rows) result.table.add_row(std::move(row));
  return result;
}

CommandResult run_command(std::string_view name, const RunConfig& config, const CommandOptions& options) {
  if (name == "spectrum") return run_spectrum(config);
  if (name == "rates") return run_rates(config);
  if (name == "simulate") return run_simulate(config, options);
  if (name == "optimize") return run_optimize(config, options);
  if (name == "sweep") return run_sweep(config, options);
  throw Error(ErrorKind::parse, "unknown command: " + std::string(name));
}

ojson to_json(const CommandResult& result, const RunConfig& config) {
  ojson doc;
  doc["command"] = result.command;
  doc["config"] = ojson::parse(to_json(config).dump());
  doc["records"] = records(result.table);
  for (const auto& [key, value] : result.extra.items()) doc[key] = value;
  if (!result.timeseries.empty()) {
    ojson blocks = ojson::object();
    for (const auto& [initial, table] : result.timeseries) blocks[initial] = records(table);
    doc["timeseries"] = std::move(blocks);
  }
  return doc;
}

void write_result(std::ostream& out, const CommandResult& result, const RunConfig& config) {
  if (config.format == OutputFormat::json) {
    out << to_json(result, config).dump(2) << '\n';
  } else {
    write_csv(out, result.table);
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return 2;
    case ErrorKind::convergence: return 4;
    default: return 3;
  }
}

}  // namespace fluxcnot::cli
