#pragma once

// JSON problem configuration:
//
//   {"alpha": 1.5, "xL": 0, "xR": 2, "Nx": 40, "T": 1, "Nt": 1600,
//    "d_plus": "x^alpha", "d_minus": "2x^alpha" | "kappa": 2,
//    "problem": "table1" | "table2" | "custom"}
//
// "custom" problems may also name "source" and "initial" ("zero" or the
// diffusion test data) and give numeric "left"/"right" boundary values.

#include <cstddef>
#include <optional>
#include <string>

#include "wsld/solver.hpp"

namespace wsld {

struct ProblemConfig {
  std::string problem = "custom";
  double alpha = 1.5;
  double x_left = 0.0;
  double x_right = 1.0;
  std::size_t nx = 2;
  double horizon = 1.0;
  std::size_t steps = 1;
  std::string d_plus = "one";
  std::optional<std::string> d_minus;
  std::optional<double> kappa;
  std::string source = "zero";
  std::string initial = "zero";
  double left = 0.0;
  double right = 0.0;
};

/// Throws ConfigError on malformed JSON, missing or mistyped fields,
/// unknown expression ids or inconsistent domains.
ProblemConfig parse_config(const std::string& text);
ProblemConfig load_config(const std::string& path);

/// Time-dependent problem for "table2" and "custom" configs.
DiffusionProblem build_problem(const ProblemConfig& config);

}  // namespace wsld
