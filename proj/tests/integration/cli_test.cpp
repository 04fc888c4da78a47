#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "config.hpp"
#include "fluxcnot/errors.hpp"
#include "table.hpp"

namespace fluxcnot::cli {
namespace {

using nlohmann::json;

json default_doc() {
  std::ifstream in(FLUXCNOT_DEFAULT_CONFIG);
  return json::parse(in);
}

std::string parse_error_message(const json& doc) {
  try {
    parse_config(doc);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error";
  return {};
}

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

double number(const Table& t, std::size_t row, const std::string& name) {
  return std::get<double>(t.rows.at(row).at(column(t, name)));
}

TEST(Config, MissingFieldNamesPath) {
  json doc = default_doc();
  doc["qubit_a"].erase("e_j");
  EXPECT_NE(parse_error_message(doc).find("qubit_a.e_j"), std::string::npos);
}

TEST(Config, RejectsUnknownKeysAndWrongTypes) {
  json doc = default_doc();
  doc["pulse"]["omega"] = 1.0;
  EXPECT_NE(parse_error_message(doc).find("pulse.omega"), std::string::npos);
  doc = default_doc();
  doc["j_c"] = "strong";
  EXPECT_NE(parse_error_message(doc).find("j_c"), std::string::npos);
  doc = default_doc();
  doc["pulse"]["envelope"] = "square";
  parse_error_message(doc);
}

TEST(Config, SweepValidation) {
  json doc = default_doc();
  doc["sweep"] = {{"parameter", "t_gate"}, {"start", 30.0}, {"stop", 60.0}, {"points", 1}};
  EXPECT_NE(parse_error_message(doc).find("points"), std::string::npos);
  doc["sweep"] = {{"parameter", "j_c"}, {"values", {0.1, 0.2}}, {"relative", true}};
  parse_error_message(doc);
  doc["sweep"] = {{"parameter", "t_gate"}, {"start", 30.0}, {"stop", 60.0}, {"points", 4}};
  const RunConfig c = parse_config(doc);
  ASSERT_TRUE(c.sweep);
  EXPECT_EQ(c.sweep->values, (std::vector<double>{30.0, 40.0, 50.0, 60.0}));
}

TEST(Config, RatesDriveIsExclusive) {
  json doc = default_doc();
  doc["rates"] = {{"f", 0.1}, {"lambda", 0.2}};
  parse_error_message(doc);
}

TEST(Config, RoundTripsThroughJson) {
  json doc = default_doc();
  doc["dissipation"] = {{"t1_01", 100.0}, {"t1_12", "inf"}};
  doc["sweep"] = {{"parameter", "omega_d"}, {"values", {-1e-4, 0.0, 1e-4}}, {"relative", true}};
  const RunConfig c = parse_config(doc);
  const RunConfig again = parse_config(to_json(c));
  EXPECT_EQ(to_json(c).dump(), to_json(again).dump());
  EXPECT_TRUE(std::isinf(again.dissipation->t1_12));
  EXPECT_EQ(again.sweep->values.size(), 3u);
}

TEST(Config, MalformedFileReportsPosition) {
  const std::string path = ::testing::TempDir() + "malformed.json";
  std::ofstream(path) << "{\n  \"j_c\": 0.35,\n  oops\n}\n";
  try {
    load_config(path);
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Spectrum, UnitSuffixedColumns) {
  const CommandResult r = run_command("spectrum", parse_config(default_doc()));
  ASSERT_EQ(r.table.rows.size(), 2u);
  for (const std::string& name : r.table.columns) {
    if (name == "qubit") continue;
    const bool suffixed = name.ends_with("_GHz") || name.ends_with("_dimless");
    EXPECT_TRUE(suffixed) << name;
  }
  EXPECT_NEAR(number(r.table, 0, "omega_01_GHz"), 0.53, 0.01);
  EXPECT_NEAR(number(r.table, 1, "omega_01_GHz"), 1.02, 0.01);
}

TEST(Rates, DarkenedDriveCancelsSingleQubitTerm) {
  json doc = default_doc();
  doc["rates"] = {{"lambda", 0.2}};
  const CommandResult r = run_command("rates", parse_config(doc));
  ASSERT_EQ(r.table.rows.size(), 1u);
  EXPECT_LT(std::abs(number(r.table, 0, "xi_ix_MHz") + number(r.table, 0, "xi_zx_MHz")), 1e-7);
  EXPECT_NEAR(number(r.table, 0, "lambda_dimless"), 0.2, 1e-12);
}

TEST(Rates, UncoupledSweepPointHasNoConditionalRate) {
  json doc = default_doc();
  doc["rates"] = {{"f", 0.1}};
  doc["sweep"] = {{"parameter", "j_c"}, {"values", {0.0, 0.1}}};
  const CommandResult r = run_command("rates", parse_config(doc));
  ASSERT_EQ(r.table.rows.size(), 2u);
  EXPECT_EQ(number(r.table, 0, "xi_zx_MHz"), 0.0);
  EXPECT_EQ(number(r.table, 0, "xi_ix_MHz"), 0.0);
  EXPECT_EQ(number(r.table, 0, "xi_zz_MHz"), 0.0);
  EXPECT_TRUE(std::isinf(number(r.table, 0, "t_fsl_ns")));
  EXPECT_NE(number(r.table, 1, "xi_zx_MHz"), 0.0);

  const json records_json = to_json(r, parse_config(doc))["records"];
  EXPECT_EQ(records_json[0]["t_fsl_ns"], "inf");
}

TEST(Rates, RejectsTimeAxes) {
  json doc = default_doc();
  doc["sweep"] = {{"parameter", "t_gate"}, {"values", {30.0, 40.0}}};
  try {
    run_command("rates", parse_config(doc));
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
  }
}

TEST(Output, TwelveSignificantDigits) {
  EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_double(6.02214076e23), "6.02214076e+23");
  Table t;
  t.columns = {"x_GHz", "label"};
  t.add_row({2.0 / 3.0, std::string("a,b")});
  std::ostringstream out;
  write_csv(out, t);
  EXPECT_EQ(out.str(), "x_GHz,label\n0.666666666667,\"a,b\"\n");
  EXPECT_THROW(t.add_row({1.0}), Error);
}

TEST(Output, ExitCodes) {
  EXPECT_EQ(exit_code(ErrorKind::parse), 2);
  EXPECT_EQ(exit_code(ErrorKind::convergence), 4);
  for (ErrorKind k : {ErrorKind::parameter, ErrorKind::numeric, ErrorKind::truncation, ErrorKind::labeling,
                      ErrorKind::lookup, ErrorKind::degeneracy, ErrorKind::correction, ErrorKind::input}) {
    EXPECT_EQ(exit_code(k), 3) << to_string(k);
  }
}

TEST(Simulate, DefaultConfigMeetsTarget) {
  json doc = default_doc();
  doc["pulse"]["dt"] = 2e-3;
  const RunConfig config = parse_config(doc);
  const CommandResult r = run_command("simulate", config, {.parallelism = 1, .timeseries = true});
  ASSERT_EQ(r.table.rows.size(), 1u);
  const double err = number(r.table, 0, "coherent_error_dimless");
  EXPECT_LE(err, 1e-4);
  EXPECT_NEAR(number(r.table, 0, "budget_sum_dimless"), err, 0.05 * err);

  ASSERT_EQ(r.timeseries.size(), 4u);
  EXPECT_EQ(r.timeseries[0].first, "00");
  EXPECT_EQ(r.timeseries[3].first, "11");
  const std::vector<std::string> expected = {"t_ns", "P_00", "P_01", "P_10", "P_11", "P_20",
                                             "P_21", "P_02", "P_12", "leak_other"};
  EXPECT_EQ(r.timeseries[2].second.columns, expected);
  const Table& from_10 = r.timeseries[2].second;
  EXPECT_GT(number(from_10, from_10.rows.size() - 1, "P_11"), 0.99);

  // Output is deterministic and re-ingestible.
  std::ostringstream first, second;
  write_result(first, r, config);
  write_result(second, run_command("simulate", config, {.parallelism = 1, .timeseries = true}), config);
  EXPECT_EQ(first.str(), second.str());

  const json doc_out = json::parse(to_json(r, config).dump());
  EXPECT_EQ(doc_out["timeseries"].size(), 4u);
  const RunConfig reread = parse_config(doc_out);
  EXPECT_EQ(to_json(reread).dump(), to_json(config).dump());
}

TEST(Simulate, IncompletePulseUsesCalibrationGuess) {
  json doc = default_doc();
  doc["pulse"].erase("omega_d");
  doc["pulse"]["dt"] = 4e-3;
  const CommandResult r = run_command("simulate", parse_config(doc));
  EXPECT_NEAR(number(r.table, 0, "omega_d_GHz"), 1.0131, 1e-3);
}

TEST(Dispatch, UnknownCommand) {
  try {
    run_command("transmogrify", parse_config(default_doc()));
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
  }
}

}  // namespace
}  // namespace fluxcnot::cli
