#include "wsld/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wsld/error.hpp"
#include "wsld/problems.hpp"

namespace wsld {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("config: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config: field '") + key + "' has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return field<T>(j, key);
}

std::size_t count_field(const json& j, const char* key) {
  const auto v = field<json>(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ConfigError(std::string("config: '") + key + "' must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

bool known_data(const std::string& id) { return id == "zero" || id == "table2"; }

}  // namespace

ProblemConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");

  ProblemConfig c;
  c.problem = field<std::string>(j, "problem");
  if (c.problem != "table1" && c.problem != "table2" && c.problem != "custom") {
    throw ConfigError("config: problem must be table1, table2 or custom");
  }
  c.alpha = field<double>(j, "alpha");
  c.x_left = field<double>(j, "xL");
  c.x_right = field<double>(j, "xR");
  c.nx = count_field(j, "Nx");
  if (!(c.x_left < c.x_right)) throw ConfigError("config: need xL < xR");
  if (c.nx < 2) throw ConfigError("config: need Nx >= 2");

  if (c.problem == "table1") {
    if (c.x_left != 0.0 || c.x_right != 1.0) throw ConfigError("config: table1 lives on [0, 1]");
    return c;
  }

  c.horizon = field<double>(j, "T");
  c.steps = count_field(j, "Nt");
  if (!(c.horizon > 0.0)) throw ConfigError("config: need T > 0");
  c.d_plus = field<std::string>(j, "d_plus");
  c.d_minus = optional_field<std::string>(j, "d_minus");
  c.kappa = optional_field<double>(j, "kappa");
  if (c.d_minus.has_value() == c.kappa.has_value()) {
    throw ConfigError("config: give exactly one of d_minus and kappa");
  }
  if (c.kappa && !(*c.kappa >= 0.0)) throw ConfigError("config: kappa must be nonnegative");
  for (const std::string* id : {&c.d_plus, c.d_minus ? &*c.d_minus : &c.d_plus}) {
    if (!problems::is_coefficient_id(*id)) {
      throw ConfigError("config: unknown coefficient expression '" + *id + "'");
    }
  }
  if (!(c.alpha > 1.0 && c.alpha < 2.0)) throw ConfigError("config: alpha must lie in (1, 2)");

  if (c.problem == "table2") {
    if (c.x_left != 0.0 || c.x_right != 2.0) throw ConfigError("config: table2 lives on [0, 2]");
    const bool coeffs_match = c.d_plus == "x^alpha" &&
                              (c.d_minus ? *c.d_minus == "2x^alpha" : *c.kappa == 2.0);
    if (!coeffs_match) throw ConfigError("config: table2 needs d_plus = x^alpha, d_minus = 2x^alpha");
    c.source = "table2";
    c.initial = "table2";
    return c;
  }

  c.source = optional_field<std::string>(j, "source").value_or("zero");
  c.initial = optional_field<std::string>(j, "initial").value_or("zero");
  if (!known_data(c.source) || !known_data(c.initial)) {
    throw ConfigError("config: source and initial must be 'zero' or 'table2'");
  }
  c.left = optional_field<double>(j, "left").value_or(0.0);
  c.right = optional_field<double>(j, "right").value_or(0.0);
  return c;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

DiffusionProblem build_problem(const ProblemConfig& c) {
  if (c.problem == "table1") throw ConfigError("config: table1 is a steady problem");
  DiffusionProblem p;
  p.alpha = c.alpha;
  p.grid = Grid1D{c.x_left, c.x_right, c.nx};
  p.d_plus = problems::coefficient(c.d_plus, c.alpha);
  if (c.kappa) {
    p.kappa = c.kappa;
  } else {
    p.d_minus = problems::coefficient(*c.d_minus, c.alpha);
  }
  const double alpha = c.alpha;
  if (c.source == "table2") {
    p.source = [alpha](double x, double t) { return problems::diffusion_source(alpha, x, t); };
  } else {
    p.source = [](double, double) { return 0.0; };
  }
  if (c.initial == "table2") {
    p.initial = problems::diffusion_initial;
  } else {
    p.initial = [](double) { return 0.0; };
  }
  p.left_value = [v = c.left](double) { return v; };
  p.right_value = [v = c.right](double) { return v; };
  p.horizon = c.horizon;
  p.steps = c.steps;
  if (c.problem == "table2") p.exact = SpaceTimeFn(problems::diffusion_exact);
  return p;
}

}  // namespace wsld
