#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fluxcnot/fluxonium.hpp"
#include "fluxcnot/lindblad.hpp"
#include "fluxcnot/optimizer.hpp"
#include "fluxcnot/pulse.hpp"

namespace fluxcnot::cli {

enum class SweepParameter { t_gate, j_c, omega_d, lambda };

const char* to_string(SweepParameter p);

struct SweepAxis {
  SweepParameter parameter = SweepParameter::t_gate;
  std::vector<double> values;
  /// omega_d values are offsets (GHz) from the base pulse and lambda values
  /// are factors on the base lambda.
  bool relative = false;
  /// Adds the three fixed relaxation scenarios to every point.
  bool dissipative = false;
  bool warm_start = false;
};

/// Pulse fields left unset are filled in from the calibration starting point.
struct PulseOverrides {
  std::optional<double> omega_d;
  std::optional<double> f_peak;
  std::optional<double> eta;
  double t_gate = 50.0;
  double sigma = 0.0;
  EnvelopeKind envelope = EnvelopeKind::gaussian;
  double dt = 1e-3;

  bool complete() const { return omega_d && f_peak && eta; }
};

/// Drive for the `rates` command: exactly one of f (GHz) or lambda. eta
/// defaults to the darkening ratio.
struct RatesRequest {
  std::optional<double> f;
  std::optional<double> lambda;
  std::optional<double> eta;
};

enum class OutputFormat { csv, json };

struct RunConfig {
  FluxoniumSpec qubit_a;
  FluxoniumSpec qubit_b;
  double j_c = 0.35;
  int levels = 5;
  PulseOverrides pulse;
  std::optional<DissipationSpec> dissipation;
  std::optional<SweepAxis> sweep;
  RatesRequest rates;
  OptimizerOptions optimizer;
  /// Start the optimizer from the configured pulse instead of the usual guess.
  bool optimize_from_pulse = false;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 0;
};

/// Strict schema: unknown keys, wrong types and missing required fields throw
/// Error(parse) naming the offending field path. A result document written
/// by the tool is accepted too; its embedded "config" is used.
RunConfig parse_config(const nlohmann::json& doc);

/// Reads and parses a file. JSON syntax errors report line and column.
RunConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& config);

}  // namespace fluxcnot::cli
