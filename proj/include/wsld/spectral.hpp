#pragma once

// Fourier-side checks of the operators: the symbol of a single shifted Lubich
// operator, generating functions of the symmetric part H = (A + A^T)/2, a
// grid scan for negative definiteness, and dense eigenvalue probes.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wsld/kernels.hpp"
#include "wsld/operators.hpp"

namespace wsld {

/// W(z) = e^{pz} ((1 - e^{-z})/z)^alpha Q_nu(e^{-z})^alpha with Q_nu = P_nu/(1 - zeta),
/// principal branches; W(0) = 1. Accurate relative to W - 1 for small |z|.
std::complex<double> symbol_W(int nu, double alpha, int p, std::complex<double> z);
/// W(z) - 1 without cancellation.
std::complex<double> symbol_W_minus_one(int nu, double alpha, int p, std::complex<double> z);

/// Closed-form generating function of H_{1,q}, nu in {3,4}, |x| <= pi; even in x.
double gen_fn_pair(int nu, double alpha, int q, double x);

/// Weighted combination of gen_fn_pair over the four pairs of an 8-shift tuple
/// whose pairs all lead with shift 1.
double gen_fn_combined(int nu, double alpha, const ShiftTuple& shifts, double x);

/// Generating function of H for any flattened scheme:
/// Re sum_t c_t e^{-i s_t x} (1 - e^{ix})^alpha Q_nu(e^{ix})^alpha.
double gen_fn_scheme(int nu, double alpha, std::span<const ShiftTerm> terms, double x);

/// True when gen_fn_combined applies to this tuple.
bool has_pair_closed_form(int nu, const ShiftTuple& shifts);

std::vector<double> default_alpha_grid();              // 1.01, 1.02, ..., 1.99
std::vector<double> default_x_grid(std::size_t count = 2048);  // uniform on [0, pi]

struct DefinitenessReport {
  double max_value = 0.0;
  double argmax_alpha = 0.0;
  double argmax_x = 0.0;
  bool pass = false;  // max_value <= tolerance
};

inline constexpr double kDefinitenessTolerance = 1e-12;

/// sup of the generating function of H over alpha_grid x x_grid.
DefinitenessReport definiteness_scan(int nu, const ShiftTuple& shifts,
                                     std::span<const double> alpha_grid,
                                     std::span<const double> x_grid,
                                     kernels::Execution ex = kernels::Execution::parallel);

struct EigenProbe {
  double lambda_min = 0.0;  // of H
  double lambda_max = 0.0;  // of H; upper bound for Re(lambda(A))
  double max_real_part_estimate() const noexcept { return lambda_max; }
};

inline constexpr std::size_t kEigenProbeMaxSize = 512;

/// Extreme eigenvalues of (A + A^T)/2 by dense symmetric eigensolve.
EigenProbe eigen_probe(const OperatorMatrix& a);

/// max Re(lambda(A)) by a dense nonsymmetric eigensolve (for cross-checks).
double max_real_eigenvalue(const OperatorMatrix& a);

}  // namespace wsld
