#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "fluxcnot/errors.hpp"

namespace {

// <stem>.timeseries_<kl>.csv next to the main output.
std::filesystem::path timeseries_path(const std::filesystem::path& output, const std::string& initial) {
  std::filesystem::path p = output;
  p.replace_extension();
  p += ".timeseries_" + initial + ".csv";
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fluxcnot;

  CLI::App app{"Selective-darkening CNOT toolkit for coupled fluxonium qubits"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string output_path;
  std::string format;
  int parallelism = 1;
  std::int64_t seed = -1;
  bool timeseries = false;

  app.add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
  app.add_option("--output", output_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--parallelism", parallelism, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Recorded in the output; all runs are deterministic")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timeseries", timeseries, "Also write population time series (simulate)");

  app.fallthrough();
  for (const char* name : {"spectrum", "rates", "simulate", "optimize", "sweep"}) app.add_subcommand(name);
  app.get_subcommand("spectrum")->description("Single-qubit frequencies and charge matrix elements");
  app.get_subcommand("rates")->description("Effective two-qubit rates, lambda and the speed limit");
  app.get_subcommand("simulate")->description("Driven gate simulation with error budget");
  app.get_subcommand("optimize")->description("Calibrate drive frequency, amplitude and eta");
  app.get_subcommand("sweep")->description("Re-optimize or scan across a parameter axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cli::RunConfig config = cli::load_config(config_path);
    if (!output_path.empty()) config.output_path = output_path;
    if (!format.empty()) config.format = format == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;
    if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);

    const std::string command = app.get_subcommands().front()->get_name();
    const cli::CommandOptions options{parallelism, timeseries};
    const cli::CommandResult result = cli::run_command(command, config, options);

    if (config.output_path.empty()) {
      cli::write_result(std::cout, result, config);
      if (config.format == cli::OutputFormat::csv) {
        for (const auto& [initial, table] : result.timeseries) {
          std::cout << '\n';
          cli::write_csv(std::cout, table);
        }
      }
    } else {
      std::ofstream out(config.output_path);
      if (!out) throw Error(ErrorKind::input, "cannot write " + config.output_path);
      cli::write_result(out, result, config);
      if (config.format == cli::OutputFormat::csv) {
        for (const auto& [initial, table] : result.timeseries) {
          const std::filesystem::path path = timeseries_path(config.output_path, initial);
          std::ofstream ts(path);
          if (!ts) throw Error(ErrorKind::input, "cannot write " + path.string());
          cli::write_csv(ts, table);
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return cli::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
