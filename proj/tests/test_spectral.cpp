#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "wsld/spectral.hpp"

using namespace wsld;

namespace {

using cplx = std::complex<double>;

// Least-squares slope of log|W(-it) - 1| against log t on [1e-3, 1e-1].
double symbol_slope(int nu, double alpha, int p) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = 21;
  for (int k = 0; k < n; ++k) {
    const double lt = std::log(1e-3) + (std::log(1e-1) - std::log(1e-3)) * k / (n - 1.0);
    const double ly = std::log(std::abs(symbol_W_minus_one(nu, alpha, p, cplx(0.0, -std::exp(lt)))));
    sx += lt;
    sy += ly;
    sxx += lt * lt;
    sxy += lt * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST(Symbol, LimitAtZeroIsOne) {
  EXPECT_EQ(symbol_W(3, 1.5, 1, 0.0), cplx(1.0));
  EXPECT_LT(std::abs(symbol_W(4, 1.5, 0, cplx(0.0, -1e-9)) - 1.0), 1e-8);
}

TEST(Symbol, UnshiftedOrderMatchesNu) {
  for (int nu : {3, 4, 5}) {
    for (double a : {1.1, 1.5, 1.8}) EXPECT_NEAR(symbol_slope(nu, a, 0), nu, 0.2) << nu;
  }
}

TEST(Symbol, ShiftedOrderIsOne) {
  for (int nu : {3, 4, 5}) EXPECT_NEAR(symbol_slope(nu, 1.5, 1), 1.0, 0.2);
}

TEST(Symbol, FourthOrderRatioBounded) {
  double prev = 0.0;
  for (double t : {0.2, 0.1, 0.05, 0.025}) {
    const cplx z(0.0, -t);
    const double r = std::abs(symbol_W_minus_one(4, 1.5, 0, z)) / std::pow(t, 4);
    EXPECT_LT(r, 10.0);
    if (prev > 0.0) EXPECT_NEAR(r / prev, 1.0, 0.2);
    prev = r;
  }
}

TEST(Symbol, CubicCoefficientForUnitShift) {
  // (W - 1 - z - z^2/2) / z^3 = c + O(z); Richardson removes the O(z) term.
  auto ratio = [](double z) {
    const cplx w1 = symbol_W_minus_one(3, 1.5, 1, z);
    return ((w1 - z - 0.5 * z * z) / (z * z * z)).real();
  };
  const double c = 2.0 * ratio(5e-3) - ratio(1e-2);
  EXPECT_NEAR(c, (2.0 - 3.0 * 1.5) / 12.0, 1e-3);
  EXPECT_NEAR(c, -0.208333, 1e-3);
}

TEST(GenFn, VanishesAtZeroAndIsEven) {
  for (int nu : {3, 4}) {
    EXPECT_EQ(gen_fn_pair(nu, 1.5, -1, 0.0), 0.0);
    EXPECT_EQ(gen_fn_combined(nu, 1.5, ShiftTuple::stable_default(), 0.0), 0.0);
    for (double x : {0.1, 1.0, 2.5, std::numbers::pi}) {
      EXPECT_EQ(gen_fn_pair(nu, 1.5, 3, x), gen_fn_pair(nu, 1.5, 3, -x));
    }
  }
  EXPECT_THROW(gen_fn_pair(5, 1.5, -1, 1.0), std::invalid_argument);
}

TEST(GenFn, PairMatchesFourierPartialSum) {
  const std::size_t k_max = 10000;
  const auto scheme = make_scheme(4, 1.5, ShiftTuple({1, -1}), k_max);
  const double x = std::numbers::pi / 2;
  double sum = 0.0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    sum += scheme.phi[k] * std::cos((static_cast<double>(k) - scheme.m()) * x);
  }
  EXPECT_NEAR(gen_fn_pair(4, 1.5, -1, x), sum, 1e-6);
}

TEST(GenFn, ClosedFormAgreesWithGenericSymbol) {
  const auto s = ShiftTuple::stable_default();
  for (int nu : {3, 4}) {
    for (double a : {1.05, 1.5, 1.95}) {
      const auto w = scheme_weights(nu, a, s);
      for (double x : default_x_grid(64)) {
        EXPECT_NEAR(gen_fn_combined(nu, a, s, x), gen_fn_scheme(nu, a, w.terms, x), 1e-12);
      }
    }
  }
}

TEST(Definiteness, StableTupleIsNonpositive) {
  const auto alphas = default_alpha_grid();
  const auto xs = default_x_grid(256);
  for (int nu : {3, 4}) {
    const auto r = definiteness_scan(nu, ShiftTuple::stable_default(), alphas, xs);
    EXPECT_TRUE(r.pass) << "nu=" << nu << " max=" << r.max_value;
  }
}

TEST(Definiteness, UnshiftedSchemeFails) {
  const auto xs = default_x_grid(256);
  const std::vector<double> alphas{1.5};
  const auto r = definiteness_scan(3, ShiftTuple({0}), alphas, xs);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_value, 0.0);
}

TEST(Definiteness, SerialAndParallelScansAgree) {
  const auto alphas = default_alpha_grid();
  const auto xs = default_x_grid(128);
  const auto a = definiteness_scan(3, ShiftTuple::stable_default(), alphas, xs,
                                   kernels::Execution::serial);
  const auto b = definiteness_scan(3, ShiftTuple::stable_default(), alphas, xs,
                                   kernels::Execution::parallel);
  EXPECT_EQ(a.max_value, b.max_value);
  EXPECT_EQ(a.argmax_alpha, b.argmax_alpha);
  EXPECT_EQ(a.argmax_x, b.argmax_x);
  EXPECT_THROW(definiteness_scan(3, ShiftTuple::stable_default(), {}, xs), std::invalid_argument);
}

TEST(EigenProbeTest, StableTupleHasNegativeSymmetricPart) {
  const auto scheme = scheme_for_grid(4, 1.5, ShiftTuple::stable_default(), 127);
  const auto e = eigen_probe(assemble_left(scheme, 127));
  EXPECT_LT(e.max_real_part_estimate(), 0.0);
}

TEST(EigenProbeTest, SpectrumInsideGeneratingFunctionRange) {
  const auto s = ShiftTuple::stable_default();
  for (int nu : {3, 4}) {
    const double a = 1.5;
    double fmin = 1e300, fmax = -1e300;
    for (double x : default_x_grid(4096)) {
      const double f = gen_fn_combined(nu, a, s, x);
      fmin = std::min(fmin, f);
      fmax = std::max(fmax, f);
    }
    for (std::size_t nx : {63u, 127u}) {
      const auto e = eigen_probe(assemble_left(scheme_for_grid(nu, a, s, nx), nx));
      EXPECT_GE(e.lambda_min, fmin - 1e-8);
      EXPECT_LE(e.lambda_max, fmax + 1e-8);
    }
  }
}

TEST(EigenProbeTest, UnshiftedTriangularSpectrum) {
  const auto op = assemble_left(scheme_for_grid(3, 1.5, ShiftTuple({0}), 20), 20);
  EXPECT_NEAR(max_real_eigenvalue(op), std::pow(11.0 / 6.0, 1.5), 1e-10);
  EXPECT_GT(max_real_eigenvalue(op), 1.0);
}

TEST(EigenProbeTest, RejectsLargeMatrices) {
  const auto scheme = scheme_for_grid(3, 1.5, ShiftTuple::stable_default(), 600);
  EXPECT_THROW(eigen_probe(assemble_left(scheme, 600)), std::invalid_argument);
}
