#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "fluxcnot/errors.hpp"

namespace fluxcnot::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::parse, "config: " + path + ": " + what);
}

// Tracks which keys of one JSON object were consumed so leftovers can be
// reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_, "expected an object");
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  double number(const std::string& key) {
    const json* v = find(key);
    if (!v) fail(field(key), "missing required field");
    return as_number(*v, key);
  }

  std::optional<double> maybe_number(const std::string& key) {
    const json* v = find(key);
    if (!v || v->is_null()) return std::nullopt;
    return as_number(*v, key);
  }

  /// Positive time, with "inf" or null meaning infinite.
  double time(const std::string& key) {
    const json* v = find(key);
    if (!v || v->is_null()) return std::numeric_limits<double>::infinity();
    if (v->is_string() && v->get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    return as_number(*v, key);
  }

  std::optional<std::int64_t> maybe_integer(const std::string& key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) fail(field(key), "expected an integer");
    return v->get<std::int64_t>();
  }

  std::optional<bool> maybe_bool(const std::string& key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) fail(field(key), "expected true or false");
    return v->get<bool>();
  }

  std::optional<std::string> maybe_string(const std::string& key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) fail(field(key), "expected a string");
    return v->get<std::string>();
  }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.contains(key)) fail(field(key), "unknown key");
    }
  }

 private:
  double as_number(const json& v, const std::string& key) const {
    if (!v.is_number()) fail(field(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(field(key), "expected a finite number");
    return x;
  }

  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

FluxoniumSpec read_qubit(const json& node, const std::string& path) {
  ObjectReader r(node, path);
  FluxoniumSpec q;
  q.e_c = r.number("e_c");
  q.e_l = r.number("e_l");
  q.e_j = r.number("e_j");
  if (auto v = r.maybe_number("phi_ext")) q.phi_ext = *v;
  if (auto v = r.maybe_integer("basis_size")) q.basis_size = static_cast<int>(*v);
  r.finish();
  try {
    q.validate();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return q;
}

PulseOverrides read_pulse(const json& node) {
  ObjectReader r(node, "pulse");
  PulseOverrides p;
  p.omega_d = r.maybe_number("omega_d");
  p.f_peak = r.maybe_number("f_peak");
  p.eta = r.maybe_number("eta");
  if (auto v = r.maybe_number("t_gate")) p.t_gate = *v;
  if (auto v = r.maybe_number("sigma")) p.sigma = *v;
  if (auto v = r.maybe_number("dt")) p.dt = *v;
  if (auto v = r.maybe_string("envelope")) {
    try {
      p.envelope = envelope_kind_from_string(*v);
    } catch (const Error&) {
      fail("pulse.envelope", "expected \"gaussian\" or \"flat_top\"");
    }
  }
  r.finish();
  if (!(p.t_gate > 0.0)) fail("pulse.t_gate", "must be positive");
  if (!(p.dt > 0.0) || p.dt > p.t_gate) fail("pulse.dt", "must lie in (0, t_gate]");
  return p;
}

DissipationSpec read_dissipation(const json& node) {
  ObjectReader r(node, "dissipation");
  DissipationSpec d;
  d.t1_01 = r.time("t1_01");
  d.t1_12 = r.time("t1_12");
  r.finish();
  if (!(d.t1_01 > 0.0)) fail("dissipation.t1_01", "must be positive");
  if (!(d.t1_12 > 0.0)) fail("dissipation.t1_12", "must be positive");
  return d;
}

SweepParameter sweep_parameter_from_string(const std::string& s) {
  if (s == "t_gate") return SweepParameter::t_gate;
  if (s == "j_c") return SweepParameter::j_c;
  if (s == "omega_d") return SweepParameter::omega_d;
  if (s == "lambda") return SweepParameter::lambda;
  fail("sweep.parameter", "expected one of t_gate, j_c, omega_d, lambda; got \"" + s + "\"");
}

SweepAxis read_sweep(const json& node) {
  ObjectReader r(node, "sweep");
  SweepAxis axis;
  const auto name = r.maybe_string("parameter");
  if (!name) fail("sweep.parameter", "missing required field");
  axis.parameter = sweep_parameter_from_string(*name);

  const json* values = r.find("values");
  const auto start = r.maybe_number("start");
  const auto stop = r.maybe_number("stop");
  const auto points = r.maybe_integer("points");
  if (values) {
    if (start || stop || points) fail("sweep", "give either values or start/stop/points, not both");
    if (!values->is_array()) fail("sweep.values", "expected an array of numbers");
    for (const json& v : *values) {
      if (!v.is_number()) fail("sweep.values", "expected an array of numbers");
      axis.values.push_back(v.get<double>());
    }
  } else {
    if (!start) fail("sweep.start", "missing required field");
    if (!stop) fail("sweep.stop", "missing required field");
    if (!points) fail("sweep.points", "missing required field");
    if (*points < 2) fail("sweep.points", "a sweep needs at least 2 points");
    for (std::int64_t i = 0; i < *points; ++i) {
      axis.values.push_back(*start + (*stop - *start) * static_cast<double>(i) / static_cast<double>(*points - 1));
    }
  }
  if (axis.values.size() < 2) fail("sweep.values", "a sweep needs at least 2 points");

  axis.relative = r.maybe_bool("relative").value_or(false);
  axis.dissipative = r.maybe_bool("dissipative").value_or(false);
  axis.warm_start = r.maybe_bool("warm_start").value_or(false);
  r.finish();
  if (axis.relative && (axis.parameter == SweepParameter::t_gate || axis.parameter == SweepParameter::j_c)) {
    fail("sweep.relative", "only omega_d and lambda sweeps can be relative");
  }
  return axis;
}

RatesRequest read_rates(const json& node) {
  ObjectReader r(node, "rates");
  RatesRequest q;
  q.f = r.maybe_number("f");
  q.lambda = r.maybe_number("lambda");
  q.eta = r.maybe_number("eta");
  r.finish();
  if (q.f && q.lambda) fail("rates", "give either f or lambda, not both");
  return q;
}

void read_optimizer(const json& node, RunConfig& config) {
  ObjectReader r(node, "optimizer");
  if (auto v = r.maybe_integer("max_evaluations")) {
    if (*v < 4) fail("optimizer.max_evaluations", "must be at least 4");
    config.optimizer.max_evaluations = static_cast<int>(*v);
  }
  if (auto v = r.maybe_number("tolerance")) {
    if (!(*v > 0.0)) fail("optimizer.tolerance", "must be positive");
    config.optimizer.tolerance = *v;
  }
  if (auto v = r.maybe_string("start")) {
    if (*v == "guess") {
      config.optimize_from_pulse = false;
    } else if (*v == "pulse") {
      config.optimize_from_pulse = true;
    } else {
      fail("optimizer.start", "expected \"guess\" or \"pulse\"");
    }
  }
  r.finish();
}

void read_output(const json& node, RunConfig& config) {
  ObjectReader r(node, "output");
  if (auto v = r.maybe_string("path")) config.output_path = *v;
  if (auto v = r.maybe_string("format")) {
    if (*v == "csv") {
      config.format = OutputFormat::csv;
    } else if (*v == "json") {
      config.format = OutputFormat::json;
    } else {
      fail("output.format", "expected \"csv\" or \"json\"");
    }
  }
  r.finish();
}

json time_to_json(double t) { return std::isinf(t) ? json("inf") : json(t); }

json qubit_to_json(const FluxoniumSpec& q) {
  return {{"e_c", q.e_c}, {"e_l", q.e_l}, {"e_j", q.e_j}, {"phi_ext", q.phi_ext}, {"basis_size", q.basis_size}};
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::t_gate: return "t_gate";
    case SweepParameter::j_c: return "j_c";
    case SweepParameter::omega_d: return "omega_d";
    case SweepParameter::lambda: return "lambda";
  }
  return "?";
}

RunConfig parse_config(const json& doc) {
  if (doc.is_object() && doc.contains("command") && doc.contains("config")) {
    return parse_config(doc.at("config"));
  }
  ObjectReader r(doc, "");
  RunConfig config;

  const json* a = r.find("qubit_a");
  if (!a) fail("qubit_a", "missing required field");
  config.qubit_a = read_qubit(*a, "qubit_a");
  const json* b = r.find("qubit_b");
  if (!b) fail("qubit_b", "missing required field");
  config.qubit_b = read_qubit(*b, "qubit_b");

  config.j_c = r.number("j_c");
  if (config.j_c < 0.0) fail("j_c", "must be non-negative");
  if (auto v = r.maybe_integer("levels")) {
    if (*v < 4) fail("levels", "must be at least 4");
    config.levels = static_cast<int>(*v);
  }
  if (const json* p = r.find("pulse")) config.pulse = read_pulse(*p);
  if (const json* d = r.find("dissipation"); d && !d->is_null()) config.dissipation = read_dissipation(*d);
  if (const json* s = r.find("sweep"); s && !s->is_null()) config.sweep = read_sweep(*s);
  if (const json* q = r.find("rates")) config.rates = read_rates(*q);
  if (const json* o = r.find("optimizer")) read_optimizer(*o, config);
  if (const json* o = r.find("output")) read_output(*o, config);
  if (auto v = r.maybe_integer("seed")) {
    if (*v < 0) fail("seed", "must be non-negative");
    config.seed = static_cast<std::uint64_t>(*v);
  }
  r.finish();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "config: cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, "config: " + path.string() + ": " + line_column(text, e.byte) +
                                      ": malformed JSON");
  }
  return parse_config(doc);
}

json to_json(const RunConfig& c) {
  json doc = {{"qubit_a", qubit_to_json(c.qubit_a)},
              {"qubit_b", qubit_to_json(c.qubit_b)},
              {"j_c", c.j_c},
              {"levels", c.levels},
              {"seed", c.seed}};

  json pulse = {{"t_gate", c.pulse.t_gate},
                {"sigma", c.pulse.sigma},
                {"dt", c.pulse.dt},
                {"envelope", fluxcnot::to_string(c.pulse.envelope)}};
  if (c.pulse.omega_d) pulse["omega_d"] = *c.pulse.omega_d;
  if (c.pulse.f_peak) pulse["f_peak"] = *c.pulse.f_peak;
  if (c.pulse.eta) pulse["eta"] = *c.pulse.eta;
  doc["pulse"] = pulse;

  if (c.dissipation) {
    doc["dissipation"] = {{"t1_01", time_to_json(c.dissipation->t1_01)},
                          {"t1_12", time_to_json(c.dissipation->t1_12)}};
  }
  if (c.sweep) {
    doc["sweep"] = {{"parameter", to_string(c.sweep->parameter)},
                    {"values", c.sweep->values},
                    {"relative", c.sweep->relative},
                    {"dissipative", c.sweep->dissipative},
                    {"warm_start", c.sweep->warm_start}};
  }
  json rates = json::object();
  if (c.rates.f) rates["f"] = *c.rates.f;
  if (c.rates.lambda) rates["lambda"] = *c.rates.lambda;
  if (c.rates.eta) rates["eta"] = *c.rates.eta;
  doc["rates"] = rates;
  doc["optimizer"] = {{"max_evaluations", c.optimizer.max_evaluations},
                      {"tolerance", c.optimizer.tolerance},
                      {"start", c.optimize_from_pulse ? "pulse" : "guess"}};
  json output = {{"format", c.format == OutputFormat::csv ? "csv" : "json"}};
  if (!c.output_path.empty()) output["path"] = c.output_path;
  doc["output"] = output;
  return doc;
}

}  // namespace fluxcnot::cli
