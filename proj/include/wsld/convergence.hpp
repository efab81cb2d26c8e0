#pragma once

// Convergence studies: error tables under grid refinement, observed rates
// and a least-squares order fit.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wsld/kernels.hpp"
#include "wsld/operators.hpp"

namespace wsld {

struct ConvergenceRow {
  double h = 0.0;
  double error = 0.0;
  std::optional<double> rate;  // absent on the first row
};

struct ConvergenceReport {
  std::string problem;
  int nu = 0;
  double alpha = 0.0;
  std::vector<int> shifts;
  std::string tau_rule;  // "none" for steady problems
  std::string measure;
  std::vector<ConvergenceRow> rows;
};

/// log(e0/e1) / log(h0/h1); valid for non-dyadic refinement.
double observed_rate(double h0, double e0, double h1, double e1);

/// Appends a row and fills its rate from the previous one.
/// Throws std::invalid_argument for a non-positive or non-finite error.
void append_row(ConvergenceReport& report, double h, double error);

/// Least-squares slope of log(error) against log(h). Needs >= 3 rows and
/// at least two distinct h.
double order_regression(const ConvergenceReport& report);

// ---------------------------------------------------------------- steady

enum class SteadyMeasure {
  truncation,  // max_{0<i<N} |h^{-alpha} (A u_exact)_i - f_i|
  solve,       // max_i |u_i - u_exact(x_i)| after solve_steady
};

std::vector<double> steady_default_hs();  // 1/10, 1/20, 1/40, 1/60
double steady_error(double alpha, std::size_t nx, SteadyMeasure measure);
/// nu = 5, p = 0 on the u = x^8 problem; one report per alpha.
std::vector<ConvergenceReport> run_table1(const std::vector<double>& alphas,
                                          const std::vector<double>& hs,
                                          SteadyMeasure measure = SteadyMeasure::truncation);

// ------------------------------------------------------------- diffusion

std::vector<double> diffusion_default_hs();  // 1/10, 1/20, 1/40, 1/80
/// Max-norm error at t = 1 with tau = h^2 and the stable default tuple.
double diffusion_error(int nu, double alpha, double h,
                       kernels::Execution ex = kernels::Execution::parallel);
/// One report per (nu, alpha), nu-major. Cells run concurrently.
std::vector<ConvergenceReport> run_table2(const std::vector<int>& nus,
                                          const std::vector<double>& alphas,
                                          const std::vector<double>& hs);

// ----------------------------------------------------------- consistency

/// Shift tuples for accuracy levels 1..4: (1), (1,-1), (1,-1,1,2) and the
/// stable default.
ShiftTuple level_shifts(int level);
/// max_{1<=i<=N-m} |h^{-alpha} (A x^8)_i - Gamma(9)/Gamma(9-alpha) x_i^{8-alpha}| on [0,1].
double consistency_error(int nu, double alpha, const ShiftTuple& shifts, std::size_t n);
ConvergenceReport run_consistency(int nu, double alpha, const ShiftTuple& shifts,
                                  const std::vector<std::size_t>& ns);
/// Grids used by the default consistency suite for a given level.
std::vector<std::size_t> consistency_default_ns(int level);

// ---------------------------------------------------------------- output

/// Header "h,error,rate"; five significant digits; empty first rate.
std::string to_csv(const ConvergenceReport& report);
std::string to_json(const std::vector<ConvergenceReport>& reports);

}  // namespace wsld
