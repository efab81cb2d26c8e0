#include "wsld/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wsld/problems.hpp"
#include "wsld/solver.hpp"

namespace wsld {

double observed_rate(double h0, double e0, double h1, double e1) {
  if (!(h0 > 0.0 && h1 > 0.0) || h0 == h1) throw std::invalid_argument("observed_rate: bad h pair");
  return std::log(e0 / e1) / std::log(h0 / h1);
}

void append_row(ConvergenceReport& report, double h, double error) {
  if (!(error > 0.0) || !std::isfinite(error)) {
    throw std::invalid_argument("convergence: errors must be positive and finite");
  }
  ConvergenceRow row{h, error, std::nullopt};
  if (!report.rows.empty()) {
    const ConvergenceRow& prev = report.rows.back();
    row.rate = observed_rate(prev.h, prev.error, h, error);
  }
  report.rows.push_back(row);
}

double order_regression(const ConvergenceReport& report) {
  const std::size_t n = report.rows.size();
  if (n < 3) throw std::invalid_argument("order_regression: need at least 3 rows");
  double mx = 0.0, my = 0.0;
  for (const auto& r : report.rows) {
    mx += std::log(r.h);
    my += std::log(r.error);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : report.rows) {
    const double dx = std::log(r.h) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(r.error) - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("order_regression: all h are equal");
  return sxy / sxx;
}

namespace {

std::size_t intervals(double h, double length) {
  const double n = length / h;
  const auto rounded = std::llround(n);
  if (rounded < 2 || std::abs(n - static_cast<double>(rounded)) > 1e-9 * n) {
    throw std::invalid_argument("convergence: h must divide the domain into >= 2 intervals");
  }
  return static_cast<std::size_t>(rounded);
}

std::vector<int> to_vector(const ShiftTuple& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

// ---------------------------------------------------------------- steady

std::vector<double> steady_default_hs() { return {1.0 / 10, 1.0 / 20, 1.0 / 40, 1.0 / 60}; }

double steady_error(double alpha, std::size_t nx, SteadyMeasure measure) {
  const double h = 1.0 / static_cast<double>(nx);
  const std::vector<double> f = problems::steady_rhs(alpha, nx);
  const std::vector<double> exact = problems::steady_exact(nx);
  double err = 0.0;
  if (measure == SteadyMeasure::truncation) {
    const WsldScheme scheme = scheme_for_grid(5, alpha, ShiftTuple({0}), nx);
    const std::vector<double> au = apply_operator(exact, scheme, h);
    for (std::size_t i = 1; i < nx; ++i) err = std::max(err, std::abs(au[i] - f[i]));
  } else {
    const SteadySolution s = solve_steady(5, 0, alpha, h, f, SteadyBoundary{0.0, 1.0});
    for (std::size_t i = 0; i <= nx; ++i) err = std::max(err, std::abs(s.u[i] - exact[i]));
  }
  return err;
}

std::vector<ConvergenceReport> run_table1(const std::vector<double>& alphas,
                                          const std::vector<double>& hs, SteadyMeasure measure) {
  std::vector<ConvergenceReport> out;
  for (double alpha : alphas) {
    ConvergenceReport r;
    r.problem = "table1";
    r.nu = 5;
    r.alpha = alpha;
    r.shifts = {0};
    r.tau_rule = "none";
    r.measure = measure == SteadyMeasure::truncation ? "truncation" : "solve";
    for (double h : hs) append_row(r, h, steady_error(alpha, intervals(h, 1.0), measure));
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------- diffusion

std::vector<double> diffusion_default_hs() { return {1.0 / 10, 1.0 / 20, 1.0 / 40, 1.0 / 80}; }

double diffusion_error(int nu, double alpha, double h, kernels::Execution ex) {
  intervals(h, 2.0);
  const DiffusionProblem problem = problems::diffusion_problem(alpha, h);
  const WsldScheme scheme =
      scheme_for_grid(nu, alpha, ShiftTuple::stable_default(), problem.grid.nx);
  CnOptions opts;
  opts.execution = ex;
  return *cn_solve(problem, scheme, opts).max_error;
}

std::vector<ConvergenceReport> run_table2(const std::vector<int>& nus,
                                          const std::vector<double>& alphas,
                                          const std::vector<double>& hs) {
  const std::size_t nh = hs.size();
  const std::size_t cells = nus.size() * alphas.size() * nh;
  std::vector<double> errors(cells, 0.0);
  std::vector<std::exception_ptr> failures(cells);

  // Each cell owns its slot; the serial assembly below fixes the order.
  const auto count = static_cast<long>(cells);
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < count; ++c) {
    const auto idx = static_cast<std::size_t>(c);
    const std::size_t ih = idx % nh;
    const std::size_t ia = (idx / nh) % alphas.size();
    const std::size_t in = idx / (nh * alphas.size());
    try {
      errors[idx] = diffusion_error(nus[in], alphas[ia], hs[ih], kernels::Execution::serial);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::vector<ConvergenceReport> out;
  std::size_t idx = 0;
  for (int nu : nus) {
    for (double alpha : alphas) {
      ConvergenceReport r;
      r.problem = "table2";
      r.nu = nu;
      r.alpha = alpha;
      r.shifts = to_vector(ShiftTuple::stable_default());
      r.tau_rule = "h^2";
      r.measure = "max_error_t1";
      for (double h : hs) append_row(r, h, errors[idx++]);
      out.push_back(std::move(r));
    }
  }
  return out;
}

// ----------------------------------------------------------- consistency

ShiftTuple level_shifts(int level) {
  switch (level) {
    case 1: return ShiftTuple({1});
    case 2: return ShiftTuple({1, -1});
    case 3: return ShiftTuple({1, -1, 1, 2});
    case 4: return ShiftTuple::stable_default();
    default: throw std::invalid_argument("level_shifts: level must be 1..4");
  }
}

double consistency_error(int nu, double alpha, const ShiftTuple& shifts, std::size_t n) {
  const WsldScheme scheme = scheme_for_grid(nu, alpha, shifts, n);
  const double h = 1.0 / static_cast<double>(n);
  const std::vector<double> u = problems::steady_exact(n);
  const std::vector<double> f = problems::steady_rhs(alpha, n);
  const std::vector<double> au = apply_operator(u, scheme, h);
  const auto m = static_cast<std::size_t>(scheme.m());
  double err = 0.0;
  for (std::size_t i = 1; i + m <= n; ++i) err = std::max(err, std::abs(au[i] - f[i]));
  return err;
}

ConvergenceReport run_consistency(int nu, double alpha, const ShiftTuple& shifts,
                                  const std::vector<std::size_t>& ns) {
  ConvergenceReport r;
  r.problem = "consistency";
  r.nu = nu;
  r.alpha = alpha;
  r.shifts = to_vector(shifts);
  r.tau_rule = "none";
  r.measure = "truncation";
  for (std::size_t n : ns) {
    append_row(r, 1.0 / static_cast<double>(n), consistency_error(nu, alpha, shifts, n));
  }
  return r;
}

std::vector<std::size_t> consistency_default_ns(int level) {
  if (level == 4) return {160, 320, 640};
  return {20, 40, 80, 160};
}

// ---------------------------------------------------------------- output

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

}  // namespace

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "h,error,rate\n";
  for (const auto& r : report.rows) {
    os << sci(r.h) << ',' << sci(r.error) << ',';
    if (r.rate) os << sci(*r.rate);
    os << '\n';
  }
  return os.str();
}

std::string to_json(const std::vector<ConvergenceReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
      nlohmann::json row{{"h", r.h}, {"error", r.error}};
      row["rate"] = r.rate ? nlohmann::json(*r.rate) : nlohmann::json(nullptr);
      rows.push_back(std::move(row));
    }
    arr.push_back({{"problem", rep.problem},
                   {"nu", rep.nu},
                   {"alpha", rep.alpha},
                   {"shifts", rep.shifts},
                   {"tau_rule", rep.tau_rule},
                   {"measure", rep.measure},
                   {"rows", std::move(rows)}});
  }
  return arr.dump(2);
}

}  // namespace wsld
