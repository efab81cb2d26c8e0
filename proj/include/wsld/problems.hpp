#pragma once

// Built-in test data: the steady power-law problem and the variable
// coefficient diffusion problem on [0, 2] with exact solution
// sin(t + 1) x^4 (2 - x)^4.

#include <cstddef>
#include <string>
#include <vector>

#include "wsld/solver.hpp"

namespace wsld::problems {

/// Gamma(k + 1) / Gamma(k + 1 - alpha), so that D^alpha x^k = g x^{k - alpha}.
double power_factor(double k, double alpha);

/// Steady problem on [0, 1]: u = x^8, f = Gamma(9)/Gamma(9 - alpha) x^{8 - alpha}.
std::vector<double> steady_rhs(double alpha, std::size_t nx);
std::vector<double> steady_exact(std::size_t nx);

/// Coefficient expression ids: "zero", "one", "x^alpha", "2x^alpha".
SpaceFn coefficient(const std::string& id, double alpha);
bool is_coefficient_id(const std::string& id);

/// Exact solution, initial data and forcing of the diffusion test problem
/// with d_+ = x^alpha, d_- = 2 x^alpha on [0, 2].
double diffusion_exact(double x, double t);
double diffusion_initial(double x);
double diffusion_source(double alpha, double x, double t);

/// The diffusion test problem with N_x = 2/h, T = 1 and tau = h^2.
DiffusionProblem diffusion_problem(double alpha, double h);
/// Same problem with an explicit step count.
DiffusionProblem diffusion_problem(double alpha, std::size_t nx, double horizon, std::size_t steps);

}  // namespace wsld::problems
