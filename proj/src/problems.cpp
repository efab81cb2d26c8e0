#include "wsld/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace wsld::problems {

double power_factor(double k, double alpha) {
  return std::exp(std::lgamma(k + 1.0) - std::lgamma(k + 1.0 - alpha));
}

std::vector<double> steady_rhs(double alpha, std::size_t nx) {
  const double g = power_factor(8.0, alpha);
  const double h = 1.0 / static_cast<double>(nx);
  std::vector<double> f(nx + 1);
  for (std::size_t i = 0; i <= nx; ++i) {
    const double x = static_cast<double>(i) * h;
    f[i] = x == 0.0 ? 0.0 : g * std::pow(x, 8.0 - alpha);
  }
  return f;
}

std::vector<double> steady_exact(std::size_t nx) {
  const double h = 1.0 / static_cast<double>(nx);
  std::vector<double> u(nx + 1);
  for (std::size_t i = 0; i <= nx; ++i) u[i] = std::pow(static_cast<double>(i) * h, 8.0);
  return u;
}

bool is_coefficient_id(const std::string& id) {
  return id == "zero" || id == "one" || id == "x^alpha" || id == "2x^alpha";
}

SpaceFn coefficient(const std::string& id, double alpha) {
  if (id == "zero") return [](double) { return 0.0; };
  if (id == "one") return [](double) { return 1.0; };
  if (id == "x^alpha") return [alpha](double x) { return std::pow(x, alpha); };
  if (id == "2x^alpha") return [alpha](double x) { return 2.0 * std::pow(x, alpha); };
  throw std::invalid_argument("unknown coefficient expression '" + id + "'");
}

double diffusion_exact(double x, double t) {
  const double y = 2.0 - x;
  return std::sin(t + 1.0) * std::pow(x * y, 4.0);
}

double diffusion_initial(double x) { return diffusion_exact(x, 0.0); }

double diffusion_source(double alpha, double x, double t) {
  // d_+ D_left^alpha u + d_- D_right^alpha u for u = x^4 (2-x)^4 expanded in
  // powers of x (left) and of y = 2 - x (right), with d_- = 2 d_+.
  const double y = 2.0 - x;
  constexpr double binom[5] = {16.0, -32.0, 24.0, -8.0, 1.0};
  double bracket = 0.0;
  for (int j = 0; j < 5; ++j) {
    const double k = 4.0 + j;
    const double xl = x > 0.0 ? std::pow(x, k - alpha) : 0.0;
    const double yr = y > 0.0 ? std::pow(y, k - alpha) : 0.0;
    bracket += binom[j] * power_factor(k, alpha) * (xl + 2.0 * yr);
  }
  const double dplus = x > 0.0 ? std::pow(x, alpha) : 0.0;
  return std::cos(t + 1.0) * std::pow(x * y, 4.0) - dplus * std::sin(t + 1.0) * bracket;
}

DiffusionProblem diffusion_problem(double alpha, std::size_t nx, double horizon,
                                   std::size_t steps) {
  DiffusionProblem p;
  p.alpha = alpha;
  p.grid = Grid1D{0.0, 2.0, nx};
  p.d_plus = coefficient("x^alpha", alpha);
  p.d_minus = coefficient("2x^alpha", alpha);
  p.kappa = 2.0;
  p.source = [alpha](double x, double t) { return diffusion_source(alpha, x, t); };
  p.initial = diffusion_initial;
  p.left_value = [](double) { return 0.0; };
  p.right_value = [](double) { return 0.0; };
  p.horizon = horizon;
  p.steps = steps;
  p.exact = SpaceTimeFn(diffusion_exact);
  return p;
}

DiffusionProblem diffusion_problem(double alpha, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("diffusion_problem: need h > 0");
  const auto nx = static_cast<std::size_t>(std::lround(2.0 / h));
  const auto steps = static_cast<std::size_t>(std::lround(1.0 / (h * h)));
  return diffusion_problem(alpha, nx, 1.0, steps);
}

}  // namespace wsld::problems
