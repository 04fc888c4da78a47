#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "fluxcnot/errors.hpp"
#include "table.hpp"

namespace fluxcnot::cli {

struct CommandOptions {
  int parallelism = 1;
  bool timeseries = false;
};

struct CommandResult {
  std::string command;
  Table table;
  /// Population blocks keyed by initial state ("00", "01", "10", "11").
  std::vector<std::pair<std::string, Table>> timeseries;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

CommandResult run_spectrum(const RunConfig& config);
CommandResult run_rates(const RunConfig& config);
CommandResult run_simulate(const RunConfig& config, const CommandOptions& options = {});
CommandResult run_optimize(const RunConfig& config, const CommandOptions& options = {});
CommandResult run_sweep(const RunConfig& config, const CommandOptions& options = {});

/// Dispatch by subcommand name. Throws Error(parse) for unknown names.
CommandResult run_command(std::string_view name, const RunConfig& config,
                          const CommandOptions& options = {});

/// One top-level object: command, config, records, then any extras.
nlohmann::ordered_json to_json(const CommandResult& result, const RunConfig& config);

void write_result(std::ostream& out, const CommandResult& result, const RunConfig& config);

/// parse -> 2, convergence -> 4, everything else from the physics modules -> 3.
int exit_code(ErrorKind kind);

}  // namespace fluxcnot::cli
