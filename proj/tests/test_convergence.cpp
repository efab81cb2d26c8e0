#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "wsld/convergence.hpp"

using namespace wsld;

TEST(Rate, GeneralTwoPointFormula) {
  EXPECT_NEAR(observed_rate(0.1, 1e-4, 0.05, 1e-4 / 16), 4.0, 1e-12);
  EXPECT_NEAR(observed_rate(1.0 / 40, 2.0, 1.0 / 60, 2.0 / std::pow(1.5, 5)), 5.0, 1e-12);
  EXPECT_THROW(observed_rate(0.1, 1.0, 0.1, 0.5), std::invalid_argument);
}

TEST(Report, FirstRowHasNoRate) {
  ConvergenceReport r;
  append_row(r, 0.1, 1e-3);
  append_row(r, 0.05, 1e-4);
  EXPECT_FALSE(r.rows[0].rate.has_value());
  ASSERT_TRUE(r.rows[1].rate.has_value());
  EXPECT_THROW(append_row(r, 0.025, 0.0), std::invalid_argument);
  EXPECT_THROW(append_row(r, 0.025, std::nan("")), std::invalid_argument);
}

TEST(Regression, ExactPowerLaw) {
  ConvergenceReport r;
  for (double h : {0.1, 0.05, 0.025, 0.0125}) append_row(r, h, 3.0 * std::pow(h, 4));
  EXPECT_NEAR(order_regression(r), 4.0, 1e-12);
}

TEST(Regression, NeedsThreeDistinctRows) {
  ConvergenceReport r;
  append_row(r, 0.1, 1.0);
  EXPECT_THROW(order_regression(r), std::invalid_argument);
  ConvergenceReport same;
  same.rows = {{0.1, 1.0, {}}, {0.1, 0.5, {}}, {0.1, 0.25, {}}};
  EXPECT_THROW(order_regression(same), std::invalid_argument);
}

TEST(Regression, PublishedFourthOrderColumn) {
  ConvergenceReport r;
  const double hs[] = {0.1, 0.05, 0.025, 0.0125};
  const double es[] = {5.8735e-03, 3.4793e-04, 2.1158e-05, 1.3045e-06};
  for (int k = 0; k < 4; ++k) append_row(r, hs[k], es[k]);
  EXPECT_NEAR(order_regression(r), 4.0, 0.1);
}

TEST(TableOne, NegativeAlphaColumn) {
  const auto reps = run_table1({-0.5}, steady_default_hs());
  ASSERT_EQ(reps.size(), 1u);
  const double paper[] = {8.0041e-04, 4.9935e-05, 2.1214e-06, 3.0790e-07};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(reps[0].rows[k].error / paper[k], 1.0, 0.02);
  EXPECT_NEAR(*reps[0].rows[3].rate, 4.7601, 0.15);
}

TEST(TableOne, SolvedColumnConvergesAtLeastFourthOrder) {
  const auto reps = run_table1({1.8}, steady_default_hs(), SteadyMeasure::solve);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_GE(*reps[0].rows[k].rate, 4.0);
}

TEST(TableOne, RejectsNonDividingStep) {
  EXPECT_THROW(run_table1({0.5}, {0.3}), std::invalid_argument);
}

TEST(TableTwo, CoarseCellsAndOrder) {
  const auto reps = run_table2({4}, {1.8}, {1.0 / 10, 1.0 / 20, 1.0 / 40});
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_NEAR(reps[0].rows[0].error / 5.8735e-03, 1.0, 0.05);
  EXPECT_NEAR(reps[0].rows[1].error / 3.4793e-04, 1.0, 0.05);
  EXPECT_NEAR(*reps[0].rows[2].rate, 4.0395, 0.2);
  EXPECT_EQ(reps[0].tau_rule, "h^2");
}

TEST(Consistency, NominalOrdersPerLevel) {
  for (int level = 1; level <= 3; ++level) {
    for (int nu : {3, 4}) {
      const auto r = run_consistency(nu, 1.5, level_shifts(level), consistency_default_ns(level));
      EXPECT_NEAR(order_regression(r), level, 0.3) << "level=" << level << " nu=" << nu;
    }
  }
  EXPECT_THROW(level_shifts(5), std::invalid_argument);
}

TEST(Output, CsvFormatAndRateClosure) {
  const auto reps = run_table1({0.5}, steady_default_hs());
  const std::string csv = to_csv(reps[0]);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "h,error,rate");
  std::vector<double> h, e, rate;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string a, b, c;
    std::getline(row, a, ',');
    std::getline(row, b, ',');
    std::getline(row, c, ',');
    if (h.empty()) {
      EXPECT_TRUE(c.empty());
    }
    h.push_back(std::stod(a));
    e.push_back(std::stod(b));
    rate.push_back(c.empty() ? 0.0 : std::stod(c));
    EXPECT_EQ(b.size(), std::string("1.2345e-06").size());
  }
  ASSERT_EQ(h.size(), 4u);
  // h values are printed rounded, so recompute from the exact steps.
  const auto hs = steady_default_hs();
  for (std::size_t k = 1; k < 4; ++k) {
    EXPECT_NEAR(std::log(e[k - 1] / e[k]) / std::log(hs[k - 1] / hs[k]), rate[k], 1e-3);
  }
}

TEST(Output, DeterministicBytes) {
  const auto a = run_table1({-0.5, 0.5}, steady_default_hs());
  const auto b = run_table1({-0.5, 0.5}, steady_default_hs());
  EXPECT_EQ(to_csv(a[0]) + to_csv(a[1]), to_csv(b[0]) + to_csv(b[1]));
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_NE(to_json(a).find("\"rate\": null"), std::string::npos);
}

TEST(TableTwo, FinestPairIsFourthOrder) {
  const auto reps = run_table2({3, 4}, {1.1, 1.5, 1.8}, diffusion_default_hs());
  ASSERT_EQ(reps.size(), 6u);
  for (const auto& r : reps) {
    EXPECT_GE(*r.rows.back().rate, 3.7) << "nu=" << r.nu << " alpha=" << r.alpha;
  }
}
