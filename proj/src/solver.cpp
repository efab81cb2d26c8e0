#include "wsld/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

#include "wsld/error.hpp"

namespace wsld {

std::vector<double> Grid1D::nodes() const {
  std::vector<double> x(nx + 1);
  for (std::size_t i = 0; i <= nx; ++i) x[i] = node(i);
  return x;
}

void Grid1D::validate() const {
  if (!(x_left < x_right)) throw std::invalid_argument("grid: need x_left < x_right");
  if (nx < 2) throw std::invalid_argument("grid: need N_x >= 2");
}

double DiffusionProblem::d_minus_at(double x) const {
  return kappa ? *kappa * d_plus(x) : d_minus(x);
}

void DiffusionProblem::validate() const {
  grid.validate();
  if (!d_plus || (!d_minus && !kappa)) throw std::invalid_argument("problem: missing coefficients");
  if (!source || !initial || !left_value || !right_value) {
    throw std::invalid_argument("problem: missing source, initial or boundary data");
  }
  if (kappa && *kappa < 0.0) throw std::invalid_argument("problem: kappa must be nonnegative");
  if (!(horizon > 0.0) || steps == 0) throw std::invalid_argument("problem: need T > 0, N_t >= 1");
  for (std::size_t i = 0; i <= grid.nx; ++i) {
    const double x = grid.node(i);
    if (d_plus(x) < 0.0 || d_minus_at(x) < 0.0) {
      throw std::invalid_argument("problem: diffusion coefficients must be nonnegative");
    }
  }
}

// ------------------------------------------------------------------ steady

namespace {

std::vector<std::pair<std::size_t, double>> steady_constraints(double alpha, std::size_t nx,
                                                               const SteadyBoundary& bc) {
  std::vector<std::pair<std::size_t, double>> rows;
  if (alpha > 0.0) {
    if (!bc.left) throw std::invalid_argument("solve_steady: alpha > 0 needs u(x_L)");
    rows.emplace_back(0, *bc.left);
  }
  if (alpha > 1.0) {
    if (!bc.right) throw std::invalid_argument("solve_steady: alpha > 1 needs u(x_L) and u(x_R)");
    rows.emplace_back(nx, *bc.right);
  }
  return rows;
}

}  // namespace

SteadySolution solve_steady(int nu, int p, double alpha, double h, std::span<const double> f,
                            const SteadyBoundary& bc) {
  if (f.size() < 3) throw std::invalid_argument("solve_steady: need at least 3 grid values");
  if (!(h > 0.0)) throw std::invalid_argument("solve_steady: need h > 0");
  const std::size_t nx = f.size() - 1;
  const auto constraints = steady_constraints(alpha, nx, bc);
  auto constrained = [&](std::size_t i) -> const double* {
    for (const auto& [row, value] : constraints) {
      if (row == i) return &value;
    }
    return nullptr;
  };

  OperatorMatrix a = assemble_left(scheme_for_grid(nu, alpha, ShiftTuple({p}), nx), nx);
  apply_scale(a, alpha, h);
  const DenseMatrix& m = a.entries;
  const auto n = static_cast<Eigen::Index>(nx + 1);

  SteadySolution sol;
  sol.u.assign(nx + 1, 0.0);
  if (p == 0) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (const double* v = constrained(static_cast<std::size_t>(i))) {
        sol.u[static_cast<std::size_t>(i)] = *v;
        continue;
      }
      double acc = f[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < i; ++j) acc -= m(i, j) * sol.u[static_cast<std::size_t>(j)];
      sol.u[static_cast<std::size_t>(i)] = acc / m(i, i);
    }
  } else {
    DenseMatrix sys = m;
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(f.data(), n);
    for (const auto& [row, value] : constraints) {
      const auto r = static_cast<Eigen::Index>(row);
      sys.row(r).setZero();
      sys(r, r) = 1.0;
      rhs(r) = value;
    }
    Eigen::PartialPivLU<DenseMatrix> lu(sys);
    if (!(lu.rcond() > 1e-15)) throw SolverError("solve_steady: system is numerically singular");
    Eigen::VectorXd u = lu.solve(rhs);
    std::copy(u.begin(), u.end(), sol.u.begin());
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    if (constrained(static_cast<std::size_t>(i))) continue;
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) acc += m(i, j) * sol.u[static_cast<std::size_t>(j)];
    sol.residual = std::max(sol.residual, std::abs(acc - f[static_cast<std::size_t>(i)]));
  }
  return sol;
}

// ---------------------------------------------------------- Crank-Nicolson

CnSystem assemble_cn_system(const DiffusionProblem& problem, const WsldScheme& scheme) {
  problem.validate();
  if (scheme.alpha != problem.alpha) {
    throw std::invalid_argument("assemble_cn_system: scheme alpha differs from problem alpha");
  }
  const std::size_t nx = problem.grid.nx;
  const double h = problem.grid.h();
  const double tau = problem.tau();
  const OperatorMatrix a = assemble_left(scheme, nx);
  const auto n = static_cast<Eigen::Index>(nx + 1);

  Eigen::VectorXd dp(n), dm(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = problem.grid.node(static_cast<std::size_t>(i));
    dp(i) = problem.d_plus(x);
    dm(i) = problem.d_minus_at(x);
  }
  CnSystem sys;
  sys.spatial = std::pow(h, -problem.alpha) *
                (dp.asDiagonal() * a.entries + dm.asDiagonal() * a.entries.transpose());
  const DenseMatrix id = DenseMatrix::Identity(n, n);
  sys.lhs = id - 0.5 * tau * sys.spatial;
  sys.rhs = id + 0.5 * tau * sys.spatial;
  for (Eigen::Index r : {Eigen::Index{0}, n - 1}) {
    sys.lhs.row(r) = id.row(r);
    sys.rhs.row(r) = id.row(r);
  }
  return sys;
}

SolveState cn_solve(const DiffusionProblem& problem, const WsldScheme& scheme,
                    const CnOptions& options) {
  const CnSystem sys = assemble_cn_system(problem, scheme);
  const std::size_t nx = problem.grid.nx;
  const auto n = static_cast<Eigen::Index>(nx + 1);
  const double tau = problem.tau();
  const std::vector<double> x = problem.grid.nodes();

  Eigen::PartialPivLU<DenseMatrix> lu(sys.lhs);
  if (!(lu.rcond() > 1e-15)) throw SolverError("cn_solve: system matrix is numerically singular");

  SolveState state;
  state.u.resize(nx + 1);
  for (std::size_t i = 0; i <= nx; ++i) state.u[i] = problem.initial(x[i]);
  auto sup = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s = std::max(s, std::abs(e));
    return s;
  };
  state.sup_norm = sup(state.u);

  Eigen::VectorXd rhs(n);
  for (std::size_t step = 0; step < problem.steps; ++step) {
    const double t_half = (static_cast<double>(step) + 0.5) * tau;
    const double t_next = static_cast<double>(step + 1) * tau;
    kernels::matvec(sys.rhs, state.u, std::span<double>(rhs.data(), static_cast<std::size_t>(n)),
                    options.execution);
    for (std::size_t i = 1; i < nx; ++i) rhs(static_cast<Eigen::Index>(i)) += tau * problem.source(x[i], t_half);
    rhs(0) = problem.left_value(t_next);
    rhs(n - 1) = problem.right_value(t_next);

    Eigen::VectorXd next;
    if (options.refactor_each_step) {
      next = Eigen::PartialPivLU<DenseMatrix>(sys.lhs).solve(rhs);
    } else {
      next = lu.solve(rhs);
    }
    std::copy(next.begin(), next.end(), state.u.begin());
    state.step = step + 1;
    state.time = t_next;

    const double norm = sup(state.u);
    if (!std::isfinite(norm) || norm > options.blowup_threshold) {
      state.sup_norm = norm;
      throw InstabilityError(state.step, norm);
    }
    state.sup_norm = std::max(state.sup_norm, norm);
  }

  if (problem.exact) {
    double err = 0.0;
    for (std::size_t i = 0; i <= nx; ++i) {
      err = std::max(err, std::abs(state.u[i] - (*problem.exact)(x[i], state.time)));
    }
    state.max_error = err;
  }
  return state;
}

StabilityReport stability_probe(const DiffusionProblem& problem, const WsldScheme& scheme,
                                double tau_over_h, std::size_t min_steps) {
  if (!(tau_over_h > 0.0)) throw std::invalid_argument("stability_probe: need tau/h > 0");
  DiffusionProblem probe = problem;
  StabilityReport report;
  report.tau = tau_over_h * problem.grid.h();
  report.steps = std::max<std::size_t>(
      static_cast<std::size_t>(std::ceil(problem.horizon / report.tau - 1e-12)), min_steps);
  probe.steps = report.steps;
  probe.horizon = report.tau * static_cast<double>(report.steps);

  const std::vector<double> x = problem.grid.nodes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    report.scale = std::max(report.scale, std::abs(problem.initial(x[i])));
    if (problem.exact) {
      for (std::size_t n = 1; n <= report.steps; ++n) {
        const double t = report.tau * static_cast<double>(n);
        report.scale = std::max(report.scale, std::abs((*problem.exact)(x[i], t)));
      }
    }
  }

  try {
    const SolveState s = cn_solve(probe, scheme);
    report.sup_norm = s.sup_norm;
  } catch (const InstabilityError& e) {
    report.aborted = true;
    report.sup_norm = e.norm();
  }
  report.bounded = !report.aborted && report.sup_norm <= kStabilityFactor * report.scale;
  return report;
}

}  // namespace wsld
