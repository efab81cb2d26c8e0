#include "wsld/lubich.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wsld {

namespace {

void check_nu(int nu, int lo = kMinNu) {
  if (nu < lo || nu > kMaxNu) {
    throw std::invalid_argument("nu must be in " + std::to_string(lo) + ".." +
                                std::to_string(kMaxNu) + ", got " + std::to_string(nu));
  }
}

std::int64_t binomial(int n, int k) {
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

std::vector<double> GeneratingPolynomial::values() const {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.value());
  return out;
}

Rational GeneratingPolynomial::at_one() const {
  Rational sum;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

GeneratingPolynomial generating_polynomial(int nu) {
  check_nu(nu);
  GeneratingPolynomial poly;
  poly.nu = nu;
  poly.coeffs.assign(static_cast<std::size_t>(nu) + 1, Rational());
  for (int i = 1; i <= nu; ++i) {
    for (int j = 0; j <= i; ++j) {
      const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
      poly.coeffs[static_cast<std::size_t>(j)] += Rational(sign * binomial(i, j), i);
    }
  }
  return poly;
}

double CoeffSeries::at(std::ptrdiff_t k) const {
  if (k < 0) return 0.0;
  if (static_cast<std::size_t>(k) >= values.size()) {
    throw std::out_of_range("coefficient index " + std::to_string(k) + " beyond series length " +
                            std::to_string(values.size()));
  }
  return values[static_cast<std::size_t>(k)];
}

CoeffSeries grunwald_coeffs(double alpha, std::size_t last_index) {
  CoeffSeries s{1, alpha, std::vector<double>(last_index + 1)};
  s.values[0] = 1.0;
  for (std::size_t m = 1; m <= last_index; ++m) {
    s.values[m] = (1.0 - (alpha + 1.0) / static_cast<double>(m)) * s.values[m - 1];
  }
  return s;
}

CoeffSeries lubich_coeffs(int nu, double alpha, std::size_t last_index) {
  check_nu(nu);
  const std::vector<double> p = generating_polynomial(nu).values();
  CoeffSeries s{nu, alpha, std::vector<double>(last_index + 1)};
  auto& g = s.values;
  g[0] = std::pow(p[0], alpha);
  for (std::size_t k = 1; k <= last_index; ++k) {
    const auto kd = static_cast<double>(k);
    const std::size_t jmax = std::min<std::size_t>(k, static_cast<std::size_t>(nu));
    double acc = 0.0;
    for (std::size_t j = 1; j <= jmax; ++j) {
      acc += ((alpha + 1.0) * static_cast<double>(j) - kd) * p[j] * g[k - j];
    }
    g[k] = acc / (kd * p[0]);
  }
  return s;
}

namespace {

using cplx = std::complex<double>;

std::vector<cplx> powers(cplx base, std::size_t n) {
  std::vector<cplx> out(n + 1);
  out[0] = 1.0;
  for (std::size_t i = 1; i <= n; ++i) out[i] = out[i - 1] * base;
  return out;
}

// Each function below is one of the nested sums, written index-for-index.

cplx nested2(std::size_t j, const std::vector<double>& l, const std::vector<cplx>& r0) {
  cplx sum = 0.0;
  for (std::size_t m = 0; m <= j; ++m) sum += r0[m] * l[m] * l[j - m];
  return sum;
}

cplx nested3(std::size_t k, const std::vector<double>& l, const std::vector<cplx>& mu,
             const std::vector<cplx>& mubar) {
  cplx sum = 0.0;
  for (std::size_t j = 0; j <= k; ++j) {
    for (std::size_t m = 0; m <= j; ++m) {
      sum += mu[m] * mubar[j - m] * l[m] * l[j - m] * l[k - j];
    }
  }
  return sum;
}

cplx nested4(std::size_t n, const std::vector<double>& l, const std::vector<cplx>& nu4,
             const std::vector<cplx>& mu, const std::vector<cplx>& mubar) {
  cplx sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t m = 0; m <= j; ++m) {
        sum += nu4[n - k] * mu[m] * mubar[j - m] * l[m] * l[j - m] * l[k - j] * l[n - k];
      }
    }
  }
  return sum;
}

cplx nested5(std::size_t q, const std::vector<double>& l, const std::vector<cplx>& nubar,
             const std::vector<cplx>& nu5, const std::vector<cplx>& mu,
             const std::vector<cplx>& mubar) {
  cplx sum = 0.0;
  for (std::size_t n = 0; n <= q; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t m = 0; m <= j; ++m) {
          sum += nubar[q - n] * nu5[n - k] * mu[m] * mubar[j - m] * l[m] * l[j - m] *
                 l[k - j] * l[n - k] * l[q - n];
        }
      }
    }
  }
  return sum;
}

}  // namespace

OracleSeries lubich_coeffs_oracle(int nu, double alpha, std::size_t last_index,
                                  double imag_tolerance) {
  check_nu(nu, 2);
  if (last_index > kOracleMaxLength) {
    throw std::invalid_argument("oracle limited to K <= " + std::to_string(kOracleMaxLength));
  }
  const RootFactorization f = root_factorization(nu);
  const std::vector<double> l = grunwald_coeffs(alpha, last_index).values;
  std::vector<std::vector<cplx>> rp;
  for (const cplx& r : f.roots) rp.push_back(powers(r, last_index));

  const double scale = std::pow(f.leading.value(), alpha);
  OracleSeries out;
  out.series = CoeffSeries{nu, alpha, std::vector<double>(last_index + 1)};
  for (std::size_t k = 0; k <= last_index; ++k) {
    cplx v;
    switch (nu) {
      case 2: v = nested2(k, l, rp[0]); break;
      case 3: v = nested3(k, l, rp[0], rp[1]); break;
      case 4: v = nested4(k, l, rp[0], rp[1], rp[2]); break;
      default: v = nested5(k, l, rp[0], rp[1], rp[2], rp[3]); break;
    }
    v *= scale;
    out.series.values[k] = v.real();
    out.max_imag_residue = std::max(out.max_imag_residue, std::abs(v.imag()));
  }
  if (out.max_imag_residue > imag_tolerance) {
    throw std::runtime_error("oracle imaginary residue " + std::to_string(out.max_imag_residue) +
                             " exceeds tolerance; root factorization is inconsistent");
  }
  return out;
}

}  // namespace wsld
