#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "wsld/operators.hpp"

using namespace wsld;

namespace {

// Single-shift matrix A_p with entry (i, j) = l_{i - j + p}, built from scratch.
DenseMatrix shifted(const CoeffSeries& l, int p, std::size_t nx) {
  const auto n = static_cast<Eigen::Index>(nx + 1);
  DenseMatrix a = DenseMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index k = i - j + p;
      if (k >= 0) a(i, j) = l.values[static_cast<std::size_t>(k)];
    }
  }
  return a;
}

// Hierarchical weighting of second-order pair matrices, with weights taken
// straight from their defining formulas.
DenseMatrix fourth_order_by_pairs(int nu, double alpha, const std::vector<int>& s,
                                  std::size_t nx) {
  const CoeffSeries l = lubich_coeffs(nu, alpha, 2 * nx + 8);
  auto pair = [&](int p, int q) -> DenseMatrix {
    return (static_cast<double>(q) / (q - p)) * shifted(l, p, nx) +
           (static_cast<double>(p) / (p - q)) * shifted(l, q, nx);
  };
  auto quad = [&](int p, int q, int r, int t) -> DenseMatrix {
    const double pq = p * q, rt = r * t;
    return (rt / (rt - pq)) * pair(p, q) + (pq / (pq - rt)) * pair(r, t);
  };
  auto c = [&](int p, int q, int r, int t) {
    const double pq = p * q, rt = r * t, spread = r + t - p - q;
    if (nu == 4) return pq * rt * spread / (6.0 * (rt - pq));
    return (2.0 * pq * rt * spread + 3.0 * alpha * (pq - rt)) / (12.0 * (rt - pq));
  };
  const double c1 = c(s[0], s[1], s[2], s[3]);
  const double c2 = c(s[4], s[5], s[6], s[7]);
  return DenseMatrix((c2 / (c2 - c1)) * quad(s[0], s[1], s[2], s[3]) +
                     (c1 / (c1 - c2)) * quad(s[4], s[5], s[6], s[7]));
}

std::vector<double> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

}  // namespace

TEST(Weights, PairExamples) {
  auto w = weights2(1, 2);
  EXPECT_DOUBLE_EQ(w.first, 2.0);
  EXPECT_DOUBLE_EQ(w.second, -1.0);
  w = weights2(1, -1);
  EXPECT_DOUBLE_EQ(w.first, 0.5);
  EXPECT_DOUBLE_EQ(w.second, 0.5);
  w = weights2(1, 0);
  EXPECT_DOUBLE_EQ(w.first, 0.0);
  EXPECT_DOUBLE_EQ(w.second, 1.0);
  EXPECT_THROW(weights2(2, 2), std::invalid_argument);
}

TEST(Weights, QuadrupleExamples) {
  auto w = weights3(1, -1, 1, 2);
  EXPECT_NEAR(w.first, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(w.second, 1.0 / 3.0, 1e-15);
  w = weights3(1, -1, 1, 3);
  EXPECT_NEAR(w.first, 0.75, 1e-15);
  EXPECT_NEAR(w.second, 0.25, 1e-15);
  w = weights3(1, 0, 1, 2);
  EXPECT_DOUBLE_EQ(w.first, 1.0);
  EXPECT_DOUBLE_EQ(w.second, 0.0);
  EXPECT_THROW(weights3(1, 2, 2, 1), std::invalid_argument);
}

TEST(Weights, FourthOrderExamples) {
  const auto s = ShiftTuple::stable_default();
  EXPECT_NEAR(error_constant(4, 1.5, 1, -1, 1, 2), -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(error_constant(4, 1.5, 1, -1, 1, 3), -0.5, 1e-15);
  auto w = weights4(4, 1.5, s.values());
  EXPECT_NEAR(w.first, 3.0, 1e-14);
  EXPECT_NEAR(w.second, -2.0, 1e-14);
  w = weights4(3, 1.5, s.values());
  EXPECT_NEAR(w.first, 5.25, 1e-14);
  EXPECT_NEAR(w.second, -4.25, 1e-14);
  for (double a : {1.1, 1.8}) {
    w = weights4(3, a, s.values());
    EXPECT_NEAR(w.first, (6.0 + 3.0 * a) / 2.0, 1e-13);
    EXPECT_NEAR(w.second, -(4.0 + 3.0 * a) / 2.0, 1e-13);
  }
  EXPECT_THROW(weights4(5, 1.5, s.values()), std::invalid_argument);
  const std::vector<int> same{1, -1, 1, 2, 1, -1, 1, 2};
  EXPECT_THROW(weights4(4, 1.5, same), std::invalid_argument);
}

TEST(Weights, PartitionOfUnity) {
  for (int nu : {3, 4}) {
    const auto w = scheme_weights(nu, 1.5, ShiftTuple::stable_default());
    for (const auto& p : w.pairs) EXPECT_NEAR(p.first + p.second, 1.0, 1e-15);
    for (const auto& p : w.quads) EXPECT_NEAR(p.first + p.second, 1.0, 1e-15);
    for (const auto& p : w.octs) EXPECT_NEAR(p.first + p.second, 1.0, 1e-15);
    double sum = 0.0;
    for (const auto& t : w.terms) sum += t.weight;
    EXPECT_NEAR(sum, 1.0, 1e-14);
  }
}

TEST(Weights, SameValuesForNuThreeAndFourBelowFourthOrder) {
  for (const ShiftTuple& s : {ShiftTuple({1, -1}), ShiftTuple({1, -1, 1, 2})}) {
    const auto w3 = scheme_weights(3, 1.5, s);
    const auto w4 = scheme_weights(4, 1.5, s);
    ASSERT_EQ(w3.terms.size(), w4.terms.size());
    for (std::size_t i = 0; i < w3.terms.size(); ++i) {
      EXPECT_EQ(w3.terms[i].weight, w4.terms[i].weight);
    }
    const auto a3 = assemble_left(scheme_for_grid(3, 1.5, s, 10), 10);
    const auto a4 = assemble_left(scheme_for_grid(4, 1.5, s, 10), 10);
    EXPECT_GT((a3.entries - a4.entries).cwiseAbs().maxCoeff(), 1e-3);
  }
}

TEST(ShiftTupleTest, Validation) {
  EXPECT_THROW(ShiftTuple({1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(ShiftTuple(std::vector<int>{}), std::invalid_argument);
  const auto s = ShiftTuple::stable_default();
  EXPECT_EQ(s.order(), 4);
  EXPECT_EQ(s.m(), 3);
}

TEST(Phi, SingleUnshiftedIsLubich) {
  const auto scheme = make_scheme(3, 1.5, ShiftTuple({0}), 30);
  const auto l = lubich_coeffs(3, 1.5, 30);
  for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(scheme.phi[k], l.values[k]);
}

TEST(Phi, PartialSumsDecayTowardZero) {
  const auto scheme = make_scheme(4, 1.5, ShiftTuple::stable_default(), 20000);
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t k = 0; k <= 2000; ++k) s1 += scheme.phi[k];
  for (std::size_t k = 0; k <= 20000; ++k) s2 += scheme.phi[k];
  EXPECT_LT(std::abs(s2), std::abs(s1));
  EXPECT_LT(std::abs(s2), 1e-4);
}

TEST(Phi, MatchesWeightedPairMatrices) {
  const std::size_t nx = 50;
  for (int nu : {3, 4}) {
    for (double a : {1.1, 1.5, 1.8}) {
      const auto s = ShiftTuple::stable_default();
      const auto op = assemble_left(scheme_for_grid(nu, a, s, nx), nx);
      const DenseMatrix ref =
          fourth_order_by_pairs(nu, a, {s.values().begin(), s.values().end()}, nx);
      EXPECT_LE((op.entries - ref).cwiseAbs().maxCoeff(), 1e-12) << "nu=" << nu << " a=" << a;
    }
  }
}

TEST(Assemble, FirstRowForUnitShift) {
  const auto scheme = scheme_for_grid(3, 1.5, ShiftTuple({1}), 4);
  const auto op = assemble_left(scheme, 4);
  const auto l = lubich_coeffs(3, 1.5, 4);
  EXPECT_EQ(op.entries(0, 0), l.values[1]);
  EXPECT_EQ(op.entries(0, 1), l.values[0]);
  for (int j = 2; j <= 4; ++j) EXPECT_EQ(op.entries(0, j), 0.0);
}

TEST(Assemble, UnshiftedIsLowerTriangularWithLeadingDiagonal) {
  const auto op = assemble_left(scheme_for_grid(3, 1.5, ShiftTuple({0}), 12), 12);
  for (Eigen::Index i = 0; i < 13; ++i) {
    EXPECT_NEAR(op.entries(i, i), std::pow(11.0 / 6.0, 1.5), 1e-14);
    for (Eigen::Index j = i + 1; j < 13; ++j) EXPECT_EQ(op.entries(i, j), 0.0);
  }
}

TEST(Assemble, ToeplitzAndTranspose) {
  const auto scheme = scheme_for_grid(4, 1.5, ShiftTuple::stable_default(), 20);
  const auto l = assemble_left(scheme, 20);
  const auto r = assemble_right(scheme, 20);
  for (Eigen::Index i = 0; i < 20; ++i) {
    for (Eigen::Index j = 0; j < 20; ++j) EXPECT_EQ(l.entries(i, j), l.entries(i + 1, j + 1));
  }
  EXPECT_EQ(r.side, Side::right);
  EXPECT_TRUE(r.entries == l.entries.transpose());
}

TEST(Assemble, RejectsTinyGrids) {
  const auto scheme = scheme_for_grid(4, 1.5, ShiftTuple::stable_default(), 20);
  EXPECT_THROW(assemble_left(scheme, 1), std::invalid_argument);
  EXPECT_THROW(assemble_left(scheme, 3), std::invalid_argument);
  const auto short_phi = make_scheme(4, 1.5, ShiftTuple::stable_default(), 10);
  EXPECT_THROW(assemble_left(short_phi, 20), std::invalid_argument);
}

TEST(Apply, MatchesMatrixOnRandomInput) {
  const std::size_t nx = 50;
  const double h = 1.0 / nx;
  for (int nu : {3, 4}) {
    for (Side side : {Side::left, Side::right}) {
      const auto scheme = scheme_for_grid(nu, 1.5, ShiftTuple::stable_default(), nx);
      auto op = assemble(scheme, nx, side);
      apply_scale(op, 1.5, h);
      apply_scale(op, 1.5, h);  // second call is a no-op
      const auto u = random_vector(nx + 1, 7u + static_cast<unsigned>(nu));
      const auto got = apply_operator(u, scheme, h, side);
      const Eigen::VectorXd ref = op.entries * Eigen::Map<const Eigen::VectorXd>(u.data(), nx + 1);
      double umax = 0.0;
      for (double v : u) umax = std::max(umax, std::abs(v));
      const double scale = std::pow(h, -1.5);
      for (std::size_t i = 0; i <= nx; ++i) {
        EXPECT_LE(std::abs(got[i] - ref(static_cast<Eigen::Index>(i))), 1e-13 * scale * umax);
      }
    }
  }
}

TEST(Apply, ZeroInputGivesZero) {
  const auto scheme = scheme_for_grid(3, 1.5, ShiftTuple::stable_default(), 10);
  for (double v : apply_operator(std::vector<double>(11, 0.0), scheme, 0.1)) EXPECT_EQ(v, 0.0);
}

TEST(Apply, RightOperatorFourthOrderOnMirroredPower) {
  // u = (1 - x)^8 mirrors the left consistency problem on [0, 1].
  const double a = 1.5;
  const double g = std::tgamma(9.0) / std::tgamma(9.0 - a);
  std::vector<double> lh, le;
  for (std::size_t nx : {160, 320, 640}) {
    const double h = 1.0 / nx;
    std::vector<double> u(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i) u[i] = std::pow(1.0 - i * h, 8.0);
    const auto scheme = scheme_for_grid(4, a, ShiftTuple::stable_default(), nx);
    const auto du = apply_operator(u, scheme, h, Side::right);
    double err = 0.0;
    for (std::size_t i = 3; i < nx; ++i) {
      err = std::max(err, std::abs(du[i] - g * std::pow(1.0 - i * h, 8.0 - a)));
    }
    lh.push_back(std::log(h));
    le.push_back(std::log(err));
  }
  const double mx = (lh[0] + lh[1] + lh[2]) / 3, my = (le[0] + le[1] + le[2]) / 3;
  double sxx = 0, sxy = 0;
  for (int k = 0; k < 3; ++k) {
    sxx += (lh[k] - mx) * (lh[k] - mx);
    sxy += (lh[k] - mx) * (le[k] - my);
  }
  EXPECT_NEAR(sxy / sxx, 4.0, 0.3);
}

TEST(Apply, ShiftedSingleOperatorIsFirstOrder) {
  const double a = 1.5;
  const double g = std::tgamma(9.0) / std::tgamma(9.0 - a);
  std::vector<double> errs;
  for (std::size_t nx : {40, 80, 160}) {
    const double h = 1.0 / nx;
    std::vector<double> u(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i) u[i] = std::pow(i * h, 8.0);
    const auto du = apply_operator(u, scheme_for_grid(3, a, ShiftTuple({1}), nx), h);
    double err = 0.0;
    for (std::size_t i = 1; i < nx; ++i) err = std::max(err, std::abs(du[i] - g * std::pow(i * h, 8.0 - a)));
    errs.push_back(err);
  }
  EXPECT_NEAR(std::log2(errs[1] / errs[2]), 1.0, 0.2);
}
