#include "wsld/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "wsld/error.hpp"

namespace wsld {

namespace {

using cplx = std::complex<double>;

cplx expm1(cplx z) {
  const double a = z.real(), b = z.imag();
  const double s = std::sin(b / 2.0);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

cplx log1p(cplx w) {
  const double re = w.real(), im = w.imag();
  return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

// (1 - e^{-z})/z - 1
cplx secant_ratio_minus_one(cplx z) {
  if (std::abs(z) > 0.5) return -expm1(-z) / z - 1.0;
  cplx term = 1.0, sum = 0.0;
  for (int n = 1; n < 30; ++n) {
    term *= -z / static_cast<double>(n + 1);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Q_nu(zeta) - 1 with 1 - zeta = u: Q_nu = sum_{i=1}^{nu} u^{i-1}/i.
cplx cofactor_minus_one(int nu, cplx u) {
  cplx sum = 0.0, pw = 1.0;
  for (int i = 2; i <= nu; ++i) {
    pw *= u;
    sum += pw / static_cast<double>(i);
  }
  return sum;
}

cplx log_symbol(int nu, double alpha, int p, cplx z) {
  if (nu < kMinNu || nu > kMaxNu) throw std::invalid_argument("symbol: nu must be in 1..5");
  if (z == cplx(0.0)) return 0.0;
  const cplx u = -expm1(-z);
  return static_cast<double>(p) * z +
         alpha * (log1p(secant_ratio_minus_one(z)) + log1p(cofactor_minus_one(nu, u)));
}

struct Trig {
  double a, b;
};

Trig cofactor_on_circle(int nu, double x) {
  if (nu == 3) {
    return {(11.0 - 7.0 * std::cos(x) + 2.0 * std::cos(2.0 * x)) / 6.0,
            (7.0 * std::sin(x) - 2.0 * std::sin(2.0 * x)) / 6.0};
  }
  if (nu == 4) {
    return {(25.0 - 23.0 * std::cos(x) + 13.0 * std::cos(2.0 * x) - 3.0 * std::cos(3.0 * x)) / 12.0,
            (23.0 * std::sin(x) - 13.0 * std::sin(2.0 * x) + 3.0 * std::sin(3.0 * x)) / 12.0};
  }
  throw std::invalid_argument("pair generating function defined for nu in {3,4}");
}

}  // namespace

cplx symbol_W_minus_one(int nu, double alpha, int p, cplx z) {
  return expm1(log_symbol(nu, alpha, p, z));
}

cplx symbol_W(int nu, double alpha, int p, cplx z) {
  return std::exp(log_symbol(nu, alpha, p, z));
}

double gen_fn_pair(int nu, double alpha, int q, double x) {
  const double ax = std::abs(x);
  if (ax > std::numbers::pi + 1e-12) throw std::invalid_argument("gen_fn_pair: |x| > pi");
  const Trig t = cofactor_on_circle(nu, ax);
  if (ax == 0.0) return 0.0;
  const WeightPair w = weights2(1, q);
  const double theta = -std::atan(t.b / t.a);
  const double phase = alpha * (ax / 2.0 - std::numbers::pi / 2.0 + theta);
  const double mag =
      std::pow(2.0 * std::sin(ax / 2.0), alpha) * std::pow(t.a * t.a + t.b * t.b, alpha / 2.0);
  return mag * (w.first * std::cos(phase - ax) + w.second * std::cos(phase - q * ax));
}

bool has_pair_closed_form(int nu, const ShiftTuple& shifts) {
  if ((nu != 3 && nu != 4) || shifts.order() != 4) return false;
  const auto s = shifts.values();
  for (std::size_t i = 0; i < s.size(); i += 2) {
    if (s[i] != 1 || s[i + 1] == 1) return false;
  }
  return true;
}

double gen_fn_combined(int nu, double alpha, const ShiftTuple& shifts, double x) {
  if (!has_pair_closed_form(nu, shifts)) {
    throw std::invalid_argument("gen_fn_combined: every pair must be (1, q), q != 1, nu in {3,4}");
  }
  const SchemeWeights w = scheme_weights(nu, alpha, shifts);
  const auto s = shifts.values();
  double f = 0.0;
  for (std::size_t pair = 0; pair < 4; ++pair) {
    const WeightPair& quad = w.quads[pair / 2];
    const double wq = (pair % 2 == 0) ? quad.first : quad.second;
    const double wo = (pair < 2) ? w.octs[0].first : w.octs[0].second;
    f += wo * wq * gen_fn_pair(nu, alpha, s[2 * pair + 1], x);
  }
  return f;
}

double gen_fn_scheme(int nu, double alpha, std::span<const ShiftTerm> terms, double x) {
  if (nu < kMinNu || nu > kMaxNu) throw std::invalid_argument("gen_fn_scheme: nu must be in 1..5");
  if (x == 0.0) return 0.0;
  const cplx zeta = std::polar(1.0, x);
  const cplx u = 1.0 - zeta;
  const cplx q = 1.0 + cofactor_minus_one(nu, u);
  const cplx symbol = std::pow(u, alpha) * std::pow(q, alpha);
  cplx sum = 0.0;
  for (const ShiftTerm& t : terms) sum += t.weight * std::polar(1.0, -t.shift * x);
  return (sum * symbol).real();
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 99; ++k) grid.push_back(1.0 + k / 100.0);
  return grid;
}

std::vector<double> default_x_grid(std::size_t count) {
  if (count < 2) throw std::invalid_argument("x grid needs at least 2 points");
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::numbers::pi * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return grid;
}

DefinitenessReport definiteness_scan(int nu, const ShiftTuple& shifts,
                                     std::span<const double> alpha_grid,
                                     std::span<const double> x_grid, kernels::Execution ex) {
  if (alpha_grid.empty() || x_grid.empty()) throw std::invalid_argument("scan grids must be non-empty");
  const bool closed = has_pair_closed_form(nu, shifts);
  // Weights depend on alpha (nu = 3), so flatten once per alpha row.
  std::vector<std::vector<ShiftTerm>> terms;
  if (!closed) {
    for (double a : alpha_grid) terms.push_back(scheme_weights(nu, a, shifts).terms);
  }
  const kernels::GridFn f = [&](std::size_t r, std::size_t c) {
    return closed ? gen_fn_combined(nu, alpha_grid[r], shifts, x_grid[c])
                  : gen_fn_scheme(nu, alpha_grid[r], terms[r], x_grid[c]);
  };
  const kernels::GridMax best = kernels::grid_max(alpha_grid.size(), x_grid.size(), f, ex);
  return {best.value, alpha_grid[best.row], x_grid[best.col], best.value <= kDefinitenessTolerance};
}

EigenProbe eigen_probe(const OperatorMatrix& a) {
  const auto n = a.n();
  if (n == 0 || n > kEigenProbeMaxSize) {
    throw std::invalid_argument("eigen_probe: matrix size must be in 1.." +
                                std::to_string(kEigenProbeMaxSize));
  }
  const Eigen::MatrixXd h = 0.5 * (a.entries + a.entries.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw SolverError("eigen_probe: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

double max_real_eigenvalue(const OperatorMatrix& a) {
  // Triangular matrices (the unshifted operators) carry their spectrum on the
  // diagonal; a QR iteration would smear the repeated eigenvalue.
  const auto& m = a.entries;
  if (m.isLowerTriangular(0.0) || m.isUpperTriangular(0.0)) return m.diagonal().maxCoeff();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(Eigen::MatrixXd(a.entries), false);
  if (solver.info() != Eigen::Success) throw SolverError("eigensolver did not converge");
  return solver.eigenvalues().real().maxCoeff();
}

}  // namespace wsld
