#pragma once

// Steady fractional problems with a single shifted Lubich operator and the
// Crank-Nicolson scheme for
//
//     u_t = d_+(x) D_left^alpha u + d_-(x) D_right^alpha u + f(x, t)
//
// on a uniform grid with Dirichlet boundary data.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wsld/kernels.hpp"
#include "wsld/operators.hpp"

namespace wsld {

struct Grid1D {
  double x_left = 0.0;
  double x_right = 1.0;
  std::size_t nx = 2;

  double h() const noexcept { return (x_right - x_left) / static_cast<double>(nx); }
  double node(std::size_t i) const noexcept { return x_left + static_cast<double>(i) * h(); }
  std::vector<double> nodes() const;
  void validate() const;
};

using SpaceFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;  // (x, t)
using TimeFn = std::function<double(double)>;

struct DiffusionProblem {
  double alpha = 1.5;
  Grid1D grid;
  SpaceFn d_plus;
  SpaceFn d_minus;
  std::optional<double> kappa;  // when set, d_minus is kappa * d_plus
  SpaceTimeFn source;
  SpaceFn initial;
  TimeFn left_value;
  TimeFn right_value;
  double horizon = 1.0;
  std::size_t steps = 1;
  std::optional<SpaceTimeFn> exact;

  double tau() const noexcept { return horizon / static_cast<double>(steps); }
  /// d_minus(x_i), honoring kappa.
  double d_minus_at(double x) const;
  /// Throws std::invalid_argument on a malformed problem.
  void validate() const;
};

// ---------------------------------------------------------------- steady

struct SteadyBoundary {
  std::optional<double> left;
  std::optional<double> right;
};

struct SteadySolution {
  std::vector<double> u;
  double residual = 0.0;  // max |h^{-alpha} (A u)_i - f_i| over equation rows
};

/// Solves h^{-alpha} A_p u = f for the single-shift operator A_p of order nu.
/// Boundary data: none for alpha <= 0; u(x_L) for 0 < alpha <= 1; u(x_L) and
/// u(x_R) for alpha > 1 (the first and last equations are replaced). p = 0
/// gives a lower-triangular system solved by forward substitution.
SteadySolution solve_steady(int nu, int p, double alpha, double h, std::span<const double> f,
                            const SteadyBoundary& bc = {});

// ---------------------------------------------------------- Crank-Nicolson

struct CnSystem {
  DenseMatrix lhs;  // I - tau/2 L, Dirichlet rows set to identity
  DenseMatrix rhs;  // I + tau/2 L, Dirichlet rows set to identity
  DenseMatrix spatial;  // L = h^{-alpha} (D_+ A + D_- A^T)
};

CnSystem assemble_cn_system(const DiffusionProblem& problem, const WsldScheme& scheme);

struct CnOptions {
  bool refactor_each_step = false;
  double blowup_threshold = 1e10;
  kernels::Execution execution = kernels::Execution::parallel;
};

struct SolveState {
  std::vector<double> u;
  std::size_t step = 0;
  double time = 0.0;
  double sup_norm = 0.0;  // max over n of ||U^n||_inf, including U^0
  std::optional<double> max_error;  // vs problem.exact at the final time
};

/// Runs problem.steps Crank-Nicolson steps. Throws InstabilityError when
/// ||U^n||_inf exceeds options.blowup_threshold.
SolveState cn_solve(const DiffusionProblem& problem, const WsldScheme& scheme,
                    const CnOptions& options = {});

struct StabilityReport {
  bool bounded = true;
  bool aborted = false;  // hit the blow-up threshold
  double sup_norm = 0.0;
  double scale = 0.0;  // reference magnitude (exact solution or data)
  std::size_t steps = 0;
  double tau = 0.0;
};

inline constexpr std::size_t kStabilityMinSteps = 40;
inline constexpr double kStabilityFactor = 10.0;

/// Runs with tau = tau_over_h * h for max(ceil(T / tau), min_steps) steps and
/// reports whether sup_n ||U^n|| stays within kStabilityFactor times the scale.
StabilityReport stability_probe(const DiffusionProblem& problem, const WsldScheme& scheme,
                                double tau_over_h, std::size_t min_steps = kStabilityMinSteps);

}  // namespace wsld
