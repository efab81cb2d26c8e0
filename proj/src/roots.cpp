#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wsld/lubich.hpp"

namespace wsld {

namespace {

using cplx = std::complex<double>;

// Cofactor C(zeta) with P_nu(zeta) = (1 - zeta) C(zeta), by synthetic division.
std::vector<Rational> cofactor(const GeneratingPolynomial& p) {
  const auto n = p.coeffs.size() - 1;
  std::vector<Rational> c(n);
  // (1 - zeta) C = P  =>  c_0 = p_0, c_j = p_j + c_{j-1}
  c[0] = p.coeffs[0];
  for (std::size_t j = 1; j < n; ++j) c[j] = p.coeffs[j] + c[j - 1];
  return c;
}

RootFactorization factor_nu2(const std::vector<Rational>& c) {
  // c_0 + c_1 zeta = c_0 (1 - mu_2 zeta)
  return {2, c[0], {cplx((-c[1] / c[0]).value(), 0.0)}};
}

RootFactorization factor_nu3(const std::vector<Rational>& c) {
  const cplx mu3 = 4.0 / cplx(7.0, std::sqrt(39.0));
  return {3, c[0], {mu3, std::conj(mu3)}};
}

// Shengjin's formulas for a zeta^3 + b zeta^2 + c zeta + d with one real and
// two complex roots (Delta > 0); returned as reciprocals.
RootFactorization factor_nu4(const std::vector<Rational>& c) {
  const Rational lead = c[0];
  const double a = (c[3] / lead).value();
  const double b = (c[2] / lead).value();
  const double cc = (c[1] / lead).value();
  const double d = 1.0;
  const double A = b * b - 3.0 * a * cc;
  const double B = b * cc - 9.0 * a * d;
  const double C = cc * cc - 3.0 * b * d;
  const double delta = B * B - 4.0 * A * C;
  if (!(delta > 0.0)) throw std::logic_error("nu=4 cofactor: expected Delta > 0");
  const double y1 = A * b + 1.5 * a * (-B - std::sqrt(delta));
  const double y2 = A * b + 1.5 * a * (-B + std::sqrt(delta));
  const double s1 = std::cbrt(y1);
  const double s2 = std::cbrt(-y2);
  const double half_sqrt3 = std::numbers::sqrt3 / 2.0;

  const cplx nu4 = 3.0 * a / (-b - (s1 - s2));
  const cplx mu4 = 3.0 * a / cplx(-b + 0.5 * (s1 - s2), half_sqrt3 * (s1 + s2));
  return {4, lead, {nu4, mu4, std::conj(mu4)}};
}

// Ferrari's reduction of the monic quartic x^4 + b x^3 + c x^2 + d x + e with
// the resolvent cubic y^3 - (c/2) y^2 + ((bd - 4e)/4) y + (4ce - b^2 e - d^2)/8
// solved by Shengjin's trigonometric form (Delta < 0, three real roots).
RootFactorization factor_nu5(const std::vector<Rational>& cf) {
  const Rational lead = cf[0];
  const Rational top = cf[4];
  const Rational rb = cf[3] / top, rc = cf[2] / top, rd = cf[1] / top, re = cf[0] / top;

  const Rational ta(1);
  const Rational tb = -(rc / Rational(2));
  const Rational tc = (rb * rd - Rational(4) * re) / Rational(4);
  const Rational td = (Rational(4) * rc * re - rb * rb * re - rd * rd) / Rational(8);

  const double a = ta.value(), b3 = tb.value(), c3 = tc.value(), d3 = td.value();
  const double A = b3 * b3 - 3.0 * a * c3;
  const double B = b3 * c3 - 9.0 * a * d3;
  const double C = c3 * c3 - 3.0 * b3 * d3;
  if (!(B * B - 4.0 * A * C < 0.0)) throw std::logic_error("nu=5 resolvent: expected Delta < 0");
  const double T = (2.0 * A * b3 - 3.0 * a * B) / (2.0 * std::pow(A, 1.5));
  const double theta = std::acos(T);
  const double sA = std::sqrt(A);
  const double ct = std::cos(theta / 3.0), st = std::sin(theta / 3.0);
  const double y_candidates[3] = {
      (-b3 - 2.0 * sA * ct) / (3.0 * a),
      (-b3 + sA * (ct + std::numbers::sqrt3 * st)) / (3.0 * a),
      (-b3 + sA * (ct - std::numbers::sqrt3 * st)) / (3.0 * a),
  };

  const double b = rb.value(), c = rc.value(), d = rd.value();
  // The quadratic split needs 8y + b^2 - 4c > 0; the largest resolvent root gives it.
  const double y = *std::max_element(std::begin(y_candidates), std::end(y_candidates));
  const double msq = 8.0 * y + b * b - 4.0 * c;
  if (!(msq > 0.0)) throw std::logic_error("nu=5 resolvent: no admissible root");
  const double M = std::sqrt(msq);
  const double N = b * y - d;

  auto reciprocal = [](double bm, double shift, double sign) {
    const cplx disc = std::sqrt(cplx(bm * bm - 16.0 * shift, 0.0));
    return 4.0 / (-bm + sign * disc);
  };
  const cplx nu5 = reciprocal(b + M, y + N / M, 1.0);
  const cplx nu5bar = reciprocal(b + M, y + N / M, -1.0);
  const cplx mu5 = reciprocal(b - M, y - N / M, 1.0);
  const cplx mu5bar = reciprocal(b - M, y - N / M, -1.0);
  return {5, lead, {nu5bar, nu5, mu5, mu5bar}};
}

}  // namespace

std::vector<std::complex<double>> RootFactorization::reconstruct() const {
  std::vector<cplx> poly{cplx(leading.value()), cplx(-leading.value())};
  for (const cplx& r : roots) {
    std::vector<cplx> next(poly.size() + 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= r * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

double RootFactorization::reconstruction_error() const {
  const auto want = generating_polynomial(nu).values();
  const auto got = reconstruct();
  if (got.size() != want.size()) return INFINITY;
  double err = 0.0;
  for (std::size_t j = 0; j < want.size(); ++j) err = std::max(err, std::abs(got[j] - want[j]));
  return err;
}

RootFactorization root_factorization(int nu) {
  if (nu < 2 || nu > kMaxNu) {
    throw std::invalid_argument("root factorization defined for nu in 2..5, got " +
                                std::to_string(nu));
  }
  const auto c = cofactor(generating_polynomial(nu));
  switch (nu) {
    case 2: return factor_nu2(c);
    case 3: return factor_nu3(c);
    case 4: return factor_nu4(c);
    default: return factor_nu5(c);
  }
}

}  // namespace wsld
