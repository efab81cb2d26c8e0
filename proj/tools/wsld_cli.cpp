// Command-line front end: coefficient tables, operator matrices, symbols,
// spectral scans, time-dependent solves and convergence suites.
//
// Exit codes: 0 success, 1 numeric failure, 2 bad arguments or config.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsld/config.hpp"
#include "wsld/convergence.hpp"
#include "wsld/error.hpp"
#include "wsld/lubich.hpp"
#include "wsld/operators.hpp"
#include "wsld/problems.hpp"
#include "wsld/solver.hpp"
#include "wsld/spectral.hpp"

using namespace wsld;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

ShiftTuple tuple_or_default(const std::vector<int>& shifts) {
  return shifts.empty() ? ShiftTuple::stable_default() : ShiftTuple(shifts);
}

// Writes to the file when a path is given, else to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CoeffsArgs {
  int nu = 3;
  double alpha = 1.5;
  std::size_t count = 10;
  bool oracle = false;
};

int run_coeffs(const CoeffsArgs& a) {
  if (a.count == 0) throw ConfigError("--count must be positive");
  const CoeffSeries s = a.oracle ? lubich_coeffs_oracle(a.nu, a.alpha, a.count - 1).series
                                 : lubich_coeffs(a.nu, a.alpha, a.count - 1);
  std::cout << "k,l_k\n";
  for (std::size_t k = 0; k < s.size(); ++k) std::cout << k << ',' << num(s.values[k]) << '\n';
  return 0;
}

struct OperatorArgs {
  int nu = 3;
  double alpha = 1.5;
  std::vector<int> shifts;
  std::size_t n = 8;
  std::string side = "left";
  double h = 0.0;
};

int run_operator(const OperatorArgs& a) {
  const WsldScheme scheme = scheme_for_grid(a.nu, a.alpha, tuple_or_default(a.shifts), a.n);
  OperatorMatrix op = assemble(scheme, a.n, a.side == "right" ? Side::right : Side::left);
  if (a.h > 0.0) apply_scale(op, a.alpha, a.h);
  for (Eigen::Index i = 0; i < op.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < op.entries.cols(); ++j) {
      std::cout << (j ? "," : "") << num(op.entries(i, j));
    }
    std::cout << '\n';
  }
  return 0;
}

struct SymbolArgs {
  int nu = 3;
  double alpha = 1.5;
  int p = 0;
  std::vector<double> z_range{1e-3, 1e-1};
  std::size_t points = 21;
};

int run_symbol(const SymbolArgs& a) {
  if (a.z_range.size() != 2 || !(a.z_range[0] > 0.0 && a.z_range[0] < a.z_range[1])) {
    throw ConfigError("--z-range needs two values 0 < lo < hi");
  }
  if (a.points < 2) throw ConfigError("--points must be at least 2");
  const double l0 = std::log(a.z_range[0]), l1 = std::log(a.z_range[1]);
  std::cout << "t,re_W,im_W,abs_W_minus_1\n";
  double first = 0.0, last = 0.0;
  for (std::size_t k = 0; k < a.points; ++k) {
    const double t = std::exp(l0 + (l1 - l0) * static_cast<double>(k) / (a.points - 1.0));
    const std::complex<double> z(0.0, -t);
    const std::complex<double> w = symbol_W(a.nu, a.alpha, a.p, z);
    const double d = std::abs(symbol_W_minus_one(a.nu, a.alpha, a.p, z));
    if (k == 0) first = d;
    last = d;
    std::cout << num(t) << ',' << num(w.real()) << ',' << num(w.imag()) << ',' << num(d) << '\n';
  }
  std::cerr << "log-log slope of |W(-it)-1|: " << std::log(last / first) / (l1 - l0) << '\n';
  return 0;
}

struct SpectraArgs {
  int nu = 3;
  std::vector<int> shifts;
  bool scan = false;
  bool eigen = false;
  std::size_t n = 64;
  double alpha = 1.5;
  std::size_t x_points = 2048;
  std::string out;
};

int run_spectra(const SpectraArgs& a) {
  if (a.scan == a.eigen) throw ConfigError("choose exactly one of --scan and --eigen");
  const ShiftTuple shifts = tuple_or_default(a.shifts);
  if (a.scan) {
    const auto alphas = default_alpha_grid();
    const auto xs = default_x_grid(a.x_points);
    if (!a.out.empty()) {
      Sink sink(a.out);
      sink.out() << "alpha,x,f\n";
      for (double alpha : alphas) {
        const SchemeWeights w = scheme_weights(a.nu, alpha, shifts);
        for (double x : xs) {
          sink.out() << num(alpha) << ',' << num(x) << ','
                     << num(gen_fn_scheme(a.nu, alpha, w.terms, x)) << '\n';
        }
      }
    }
    const DefinitenessReport r = definiteness_scan(a.nu, shifts, alphas, xs);
    std::cout << "max f = " << num(r.max_value) << " at alpha = " << r.argmax_alpha
              << ", x = " << r.argmax_x << " -> " << (r.pass ? "PASS" : "FAIL") << '\n';
    return r.pass ? 0 : kExitNumeric;
  }
  const WsldScheme scheme = scheme_for_grid(a.nu, a.alpha, shifts, a.n);
  const EigenProbe e = eigen_probe(assemble_left(scheme, a.n));
  std::cout << "lambda_min(H) = " << num(e.lambda_min) << "\nlambda_max(H) = "
            << num(e.lambda_max) << '\n';
  return e.lambda_max < 0.0 ? 0 : kExitNumeric;
}

struct SolveArgs {
  std::string config;
  int nu = 0;
  std::vector<int> shifts;
  std::string csv;
};

int run_solve(const SolveArgs& a) {
  const ProblemConfig cfg = load_config(a.config);
  Sink sink(a.csv);
  if (cfg.problem == "table1") {
    const int nu = a.nu ? a.nu : 5;
    const int p = a.shifts.empty() ? 0 : a.shifts.front();
    if (a.shifts.size() > 1) throw ConfigError("table1 takes a single shift");
    const double h = 1.0 / static_cast<double>(cfg.nx);
    const auto f = problems::steady_rhs(cfg.alpha, cfg.nx);
    const auto exact = problems::steady_exact(cfg.nx);
    const SteadySolution s = solve_steady(nu, p, cfg.alpha, h, f, SteadyBoundary{0.0, 1.0});
    double err = 0.0;
    if (!a.csv.empty()) sink.out() << "x,u,exact\n";
    for (std::size_t i = 0; i <= cfg.nx; ++i) {
      err = std::max(err, std::abs(s.u[i] - exact[i]));
      if (!a.csv.empty()) {
        sink.out() << num(static_cast<double>(i) * h) << ',' << num(s.u[i]) << ','
                   << num(exact[i]) << '\n';
      }
    }
    std::cout << "residual " << num(s.residual) << "\nmax error " << num(err) << '\n';
    return 0;
  }

  const DiffusionProblem problem = build_problem(cfg);
  const int nu = a.nu ? a.nu : 4;
  const ShiftTuple shifts = tuple_or_default(a.shifts);
  const WsldScheme scheme = scheme_for_grid(nu, cfg.alpha, shifts, cfg.nx);
  if (!scheme.stability_verified()) {
    std::cerr << "warning: unverified stability for this nu and shift tuple\n";
  }
  const SolveState st = cn_solve(problem, scheme);
  if (!a.csv.empty()) {
    sink.out() << "x,u\n";
    for (std::size_t i = 0; i < st.u.size(); ++i) {
      sink.out() << num(problem.grid.node(i)) << ',' << num(st.u[i]) << '\n';
    }
  }
  std::cout << "t " << st.time << "\nsup norm " << num(st.sup_norm) << '\n';
  if (st.max_error) std::cout << "max error " << num(*st.max_error) << '\n';
  return 0;
}

struct ConvergenceArgs {
  std::string suite;
  std::string out;
  bool json = false;
  std::string measure = "truncation";
};

int run_convergence(const ConvergenceArgs& a) {
  std::vector<ConvergenceReport> reports;
  if (a.suite == "table1") {
    const auto m = a.measure == "solve" ? SteadyMeasure::solve : SteadyMeasure::truncation;
    reports = run_table1({-0.5, 0.5, 1.8}, steady_default_hs(), m);
  } else if (a.suite == "table2") {
    reports = run_table2({3, 4}, {1.1, 1.5, 1.8}, diffusion_default_hs());
  } else {
    for (int level = 1; level <= 4; ++level) {
      for (int nu : {3, 4}) {
        for (double alpha : {1.1, 1.5, 1.8}) {
          reports.push_back(
              run_consistency(nu, alpha, level_shifts(level), consistency_default_ns(level)));
        }
      }
    }
  }

  Sink sink(a.out);
  if (a.json) {
    sink.out() << to_json(reports) << '\n';
  } else {
    for (const auto& r : reports) {
      sink.out() << "# " << r.problem << " nu=" << r.nu << " alpha=" << r.alpha << '\n'
                 << to_csv(r);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted and shifted Lubich difference operators"};
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "Power-series coefficients l_k");
  c->add_option("--nu", coeffs.nu)->check(CLI::Range(kMinNu, kMaxNu));
  c->add_option("--alpha", coeffs.alpha);
  c->add_option("--count", coeffs.count, "number of coefficients");
  c->add_flag("--oracle", coeffs.oracle, "use the nested-sum route (nu 2..5)");

  OperatorArgs op;
  auto* o = app.add_subcommand("operator", "Dense operator matrix as CSV");
  o->add_option("--nu", op.nu)->check(CLI::Range(kMinNu, kMaxNu));
  o->add_option("--alpha", op.alpha);
  o->add_option("--shifts", op.shifts)->delimiter(',');
  o->add_option("--n", op.n, "number of intervals N_x");
  o->add_option("--side", op.side)->check(CLI::IsMember({"left", "right"}));
  o->add_option("--step", op.h, "grid step h; applies h^{-alpha} when positive");

  SymbolArgs sym;
  auto* s = app.add_subcommand("symbol", "Symbol W(-it) over a log-spaced t range");
  s->add_option("--nu", sym.nu)->check(CLI::Range(kMinNu, kMaxNu));
  s->add_option("--alpha", sym.alpha);
  s->add_option("--p", sym.p);
  s->add_option("--z-range", sym.z_range)->delimiter(',')->expected(2);
  s->add_option("--points", sym.points);

  SpectraArgs sp;
  auto* e = app.add_subcommand("spectra", "Definiteness scan or eigenvalue probe");
  e->add_option("--nu", sp.nu)->check(CLI::Range(kMinNu, kMaxNu));
  e->add_option("--shifts", sp.shifts)->delimiter(',');
  e->add_flag("--scan", sp.scan);
  e->add_flag("--eigen", sp.eigen);
  e->add_option("--n", sp.n);
  e->add_option("--alpha", sp.alpha);
  e->add_option("--x-points", sp.x_points);
  e->add_option("--out", sp.out, "CSV of (alpha, x, f) for --scan");

  SolveArgs so;
  auto* v = app.add_subcommand("solve", "Solve the problem described by a JSON config");
  v->add_option("--config", so.config)->required();
  v->add_option("--nu", so.nu)->check(CLI::Range(kMinNu, kMaxNu));
  v->add_option("--shifts", so.shifts)->delimiter(',');
  v->add_option("--csv", so.csv);

  ConvergenceArgs cv;
  auto* g = app.add_subcommand("convergence", "Error tables under refinement");
  g->add_option("--suite", cv.suite)
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "consistency"}));
  g->add_option("--out", cv.out);
  g->add_flag("--json", cv.json);
  g->add_option("--measure", cv.measure)->check(CLI::IsMember({"truncation", "solve"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*c) return run_coeffs(coeffs);
    if (*o) return run_operator(op);
    if (*s) return run_symbol(sym);
    if (*e) return run_spectra(sp);
    if (*v) return run_solve(so);
    return run_convergence(cv);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitNumeric;
  }
}
