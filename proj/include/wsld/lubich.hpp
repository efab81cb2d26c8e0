#pragma once

// Power-series coefficients of the Lubich generating function
//
//     delta^alpha(zeta) = ( sum_{i=1}^{nu} (1 - zeta)^i / i )^alpha,   nu = 1..5
//
// Two independent routes are provided: a Miller-type recurrence on the
// generating polynomial (the production path) and the nested convolution of
// binomial series over the polynomial's roots (the oracle path).

#include <complex>
#include <cstddef>
#include <vector>

#include "wsld/rational.hpp"

namespace wsld {

inline constexpr int kMinNu = 1;
inline constexpr int kMaxNu = 5;

/// P_nu(zeta) = sum_{i=1}^{nu} (1 - zeta)^i / i, coefficients stored exactly.
struct GeneratingPolynomial {
  int nu = 1;
  std::vector<Rational> coeffs;  // coeffs[j] multiplies zeta^j, j = 0..nu

  /// Floating-point copy of coeffs, converted once.
  std::vector<double> values() const;
  /// P_nu(1); zero for every nu.
  Rational at_one() const;
};

GeneratingPolynomial generating_polynomial(int nu);

/// l_0 .. l_K of delta^alpha for one (nu, alpha).
struct CoeffSeries {
  int nu = 1;
  double alpha = 0.0;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  /// Last stored index K.
  std::size_t last() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  /// l_k with the zero-extension convention l_k = 0 for k < 0.
  double at(std::ptrdiff_t k) const;
};

/// Grunwald weights l_m^{1,alpha} from the two-term recursion.
CoeffSeries grunwald_coeffs(double alpha, std::size_t last_index);

/// Production path: k p_0 g_k = sum_{j=1}^{min(k,nu)} ((alpha+1) j - k) p_j g_{k-j},
/// g_0 = p_0^alpha. O(nu K).
CoeffSeries lubich_coeffs(int nu, double alpha, std::size_t last_index);

/// Roots of the cofactor of (1 - zeta) in P_nu, written as reciprocal roots:
/// P_nu(zeta) = leading (1 - zeta) prod_j (1 - roots[j] zeta).
struct RootFactorization {
  int nu = 2;
  Rational leading;
  std::vector<std::complex<double>> roots;

  /// Coefficients of leading (1 - zeta) prod_j (1 - roots[j] zeta).
  std::vector<std::complex<double>> reconstruct() const;
  /// max_j |reconstruct()[j] - P_nu coeffs[j]|.
  double reconstruction_error() const;
};

/// Closed-form roots: rational for nu = 2, quadratic for nu = 3, Shengjin's
/// cubic formulas for nu = 4, Ferrari's quartic reduction for nu = 5.
RootFactorization root_factorization(int nu);

struct OracleSeries {
  CoeffSeries series;
  double max_imag_residue = 0.0;
};

inline constexpr std::size_t kOracleMaxLength = 128;
inline constexpr double kOracleImagTolerance = 1e-12;

/// Oracle path: the literal nested sums over binomial series weighted by
/// powers of the reciprocal roots. O(K^nu); last_index <= kOracleMaxLength.
/// Throws std::runtime_error if an imaginary residue exceeds imag_tolerance.
OracleSeries lubich_coeffs_oracle(int nu, double alpha, std::size_t last_index,
                                  double imag_tolerance = kOracleImagTolerance);

}  // namespace wsld
