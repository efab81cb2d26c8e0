#include "wsld/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "wsld/kernels.hpp"

namespace wsld {

ShiftTuple::ShiftTuple(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n != 1 && n != 2 && n != 4 && n != 8) {
    throw std::invalid_argument("shift tuple must have 1, 2, 4 or 8 entries, got " +
                                std::to_string(n));
  }
}

ShiftTuple ShiftTuple::stable_default() { return ShiftTuple({1, -1, 1, 2, 1, -1, 1, 3}); }

int ShiftTuple::order() const noexcept {
  switch (values_.size()) {
    case 1: return 1;
    case 2: return 2;
    case 4: return 3;
    default: return 4;
  }
}

int ShiftTuple::m() const noexcept {
  int m = 0;
  for (int v : values_) m = std::max(m, std::abs(v));
  return m;
}

WeightPair weights2(int p, int q) {
  if (p == q) throw std::invalid_argument("weights2: shifts must differ (p == q)");
  const double d = static_cast<double>(q - p);
  return {q / d, -p / d};
}

WeightPair weights3(int p, int q, int r, int s) {
  const long pq = static_cast<long>(p) * q;
  const long rs = static_cast<long>(r) * s;
  if (pq == rs) throw std::invalid_argument("weights3: pq == rs");
  const double d = static_cast<double>(rs - pq);
  return {rs / d, -pq / d};
}

double error_constant(int nu, double alpha, int p, int q, int r, int s) {
  const double pq = static_cast<double>(p) * q;
  const double rs = static_cast<double>(r) * s;
  const double prod = pq * rs;
  const double spread = static_cast<double>(r + s - p - q);
  if (pq == rs) throw std::invalid_argument("error_constant: pq == rs");
  switch (nu) {
    case 3: return (2.0 * prod * spread + 3.0 * alpha * (pq - rs)) / (12.0 * (rs - pq));
    case 4: return prod * spread / (6.0 * (rs - pq));
    default:
      throw std::invalid_argument("fourth-order weights need nu in {3,4}, got " +
                                  std::to_string(nu));
  }
}

WeightPair weights4(int nu, double alpha, std::span<const int> s) {
  if (s.size() != 8) throw std::invalid_argument("weights4: need 8 shifts");
  const double c = error_constant(nu, alpha, s[0], s[1], s[2], s[3]);
  const double cbar = error_constant(nu, alpha, s[4], s[5], s[6], s[7]);
  if (c == cbar) throw std::invalid_argument("weights4: both quadruples have equal c values");
  return {cbar / (cbar - c), c / (c - cbar)};
}

SchemeWeights scheme_weights(int nu, double alpha, const ShiftTuple& shifts) {
  if (nu < kMinNu || nu > kMaxNu) throw std::invalid_argument("nu must be in 1..5");
  const auto s = shifts.values();
  SchemeWeights w;
  if (shifts.order() == 1) {
    w.terms = {{s[0], 1.0}};
    return w;
  }
  if (shifts.order() == 4 && nu != 3 && nu != 4) {
    throw std::invalid_argument("fourth-order schemes need nu in {3,4}, got " + std::to_string(nu));
  }
  for (std::size_t i = 0; i < s.size(); i += 2) w.pairs.push_back(weights2(s[i], s[i + 1]));
  for (std::size_t i = 0; i + 3 < s.size(); i += 4) {
    w.quads.push_back(weights3(s[i], s[i + 1], s[i + 2], s[i + 3]));
  }
  if (shifts.order() == 4) w.octs.push_back(weights4(nu, alpha, s));

  // Flatten: every shift's coefficient is the product of the weights on its path.
  for (std::size_t i = 0; i < s.size(); ++i) {
    const WeightPair& pair = w.pairs[i / 2];
    double c = (i % 2 == 0) ? pair.first : pair.second;
    if (!w.quads.empty()) {
      const WeightPair& quad = w.quads[i / 4];
      c *= ((i / 2) % 2 == 0) ? quad.first : quad.second;
    }
    if (!w.octs.empty()) c *= (i < 4) ? w.octs[0].first : w.octs[0].second;
    w.terms.push_back({s[i], c});
  }
  return w;
}

std::vector<double> phi_coeffs(std::span<const ShiftTerm> terms, int m, const CoeffSeries& l,
                               std::size_t last_index) {
  if (l.size() < last_index + 1) {
    throw std::invalid_argument("phi_coeffs: coefficient series too short");
  }
  std::vector<double> phi(last_index + 1, 0.0);
  for (std::size_t k = 0; k <= last_index; ++k) {
    double acc = 0.0;
    for (const ShiftTerm& t : terms) {
      acc += t.weight * l.at(static_cast<std::ptrdiff_t>(k) + t.shift - m);
    }
    phi[k] = acc;
  }
  return phi;
}

bool WsldScheme::stability_verified() const noexcept {
  return (nu == 3 || nu == 4) && shifts == ShiftTuple::stable_default() && alpha > 1.0 &&
         alpha < 2.0;
}

WsldScheme make_scheme(int nu, double alpha, const ShiftTuple& shifts, std::size_t phi_last) {
  WsldScheme scheme{nu, alpha, shifts, scheme_weights(nu, alpha, shifts), {}};
  const CoeffSeries l = lubich_coeffs(nu, alpha, phi_last);
  scheme.phi = phi_coeffs(scheme.weights.terms, shifts.m(), l, phi_last);
  return scheme;
}

WsldScheme scheme_for_grid(int nu, double alpha, const ShiftTuple& shifts, std::size_t nx) {
  return make_scheme(nu, alpha, shifts, std::max<std::size_t>(4 * nx, nx + 2 * shifts.m()));
}

OperatorMatrix assemble_left(const WsldScheme& scheme, std::size_t nx) {
  const int m = scheme.m();
  if (nx < 2) throw std::invalid_argument("assemble: need N_x >= 2");
  if (static_cast<std::size_t>(m) >= nx) {
    throw std::invalid_argument("assemble: stencil shift m=" + std::to_string(m) +
                                " does not fit a grid with N_x=" + std::to_string(nx));
  }
  if (scheme.phi.size() < nx + static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("assemble: phi series shorter than N_x + m + 1");
  }
  const auto n = static_cast<Eigen::Index>(nx + 1);
  OperatorMatrix op{Side::left, false, DenseMatrix::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index k = i - j + m;
      if (k >= 0) op.entries(i, j) = scheme.phi[static_cast<std::size_t>(k)];
    }
  }
  return op;
}

OperatorMatrix assemble_right(const WsldScheme& scheme, std::size_t nx) {
  OperatorMatrix op = assemble_left(scheme, nx);
  op.entries.transposeInPlace();
  op.side = Side::right;
  return op;
}

OperatorMatrix assemble(const WsldScheme& scheme, std::size_t nx, Side side) {
  return side == Side::left ? assemble_left(scheme, nx) : assemble_right(scheme, nx);
}

void apply_scale(OperatorMatrix& op, double alpha, double h) {
  if (op.scaled) return;
  op.entries *= std::pow(h, -alpha);
  op.scaled = true;
}

std::vector<double> apply_operator(std::span<const double> u, const WsldScheme& scheme, double h,
                                   Side side) {
  std::vector<double> out(u.size());
  kernels::convolve(scheme.phi, scheme.m(), u, out, side);
  const double scale = std::pow(h, -scheme.alpha);
  for (double& v : out) v *= scale;
  return out;
}

}  // namespace wsld
