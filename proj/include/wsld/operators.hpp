#pragma once

// Weighted and shifted Lubich difference operators on a uniform grid.
//
// A shift tuple of length 1, 2, 4 or 8 selects the accuracy level (1st..4th
// order). Each level is a weighted pair of the level below; flattening the
// weights gives one coefficient per shift, and the combined convolution
// weights are
//
//     phi_k = sum_t c_t * l_{k + s_t - m},     m = max_t |s_t|,
//
// with l_j = 0 for j < 0. On the grid x_0..x_N the left operator matrix has
// entry (i, j) = phi_{i - j + m}; the right operator is its transpose.
// The h^{-alpha} factor is left to the caller.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wsld/lubich.hpp"

namespace wsld {

using DenseMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Side { left, right };

/// Integer shifts (p), (p,q), (p,q,r,s) or (p,q,r,s,pb,qb,rb,sb).
class ShiftTuple {
 public:
  explicit ShiftTuple(std::vector<int> values);

  /// (1,-1,1,2,1,-1,1,3), the tuple with a proven negative-definite symmetric part.
  static ShiftTuple stable_default();

  std::span<const int> values() const noexcept { return values_; }
  /// Accuracy level: 1, 2, 3 or 4.
  int order() const noexcept;
  /// max |shift|.
  int m() const noexcept;

  friend bool operator==(const ShiftTuple&, const ShiftTuple&) = default;

 private:
  std::vector<int> values_;
};

struct WeightPair {
  double first = 0.0;
  double second = 0.0;
};

/// (w_p, w_q) = (q/(q-p), p/(p-q)). Throws if p == q.
WeightPair weights2(int p, int q);
/// (w_{p,q}, w_{r,s}) = (rs/(rs-pq), pq/(pq-rs)). Throws if pq == rs.
WeightPair weights3(int p, int q, int r, int s);
/// Third-order error constant c^nu_{p,q,r,s} of the (p,q,r,s) operator; nu in {3,4}.
double error_constant(int nu, double alpha, int p, int q, int r, int s);
/// (w_{p,q,r,s}, w_{pb,qb,rb,sb}) from the two error constants. Throws if they coincide.
WeightPair weights4(int nu, double alpha, std::span<const int> shifts);

struct ShiftTerm {
  int shift = 0;
  double weight = 0.0;
};

/// Level weights and their flattening into one coefficient per shift.
struct SchemeWeights {
  std::vector<WeightPair> pairs;  // (w_p,w_q), (w_r,w_s), ... one per shift pair
  std::vector<WeightPair> quads;  // (w_{p,q},w_{r,s}), one per quadruple
  std::vector<WeightPair> octs;   // (w_{p,q,r,s}, w_{pb,qb,rb,sb})
  std::vector<ShiftTerm> terms;   // flattened, in tuple order
};

/// Throws std::invalid_argument on invalid shifts (p == q, pq == rs, equal c values)
/// or when a 4th-order tuple is used with nu outside {3,4}.
SchemeWeights scheme_weights(int nu, double alpha, const ShiftTuple& shifts);

/// phi_0..phi_K from an l-series holding at least K + m + 1 entries.
std::vector<double> phi_coeffs(std::span<const ShiftTerm> terms, int m, const CoeffSeries& l,
                               std::size_t last_index);

struct WsldScheme {
  int nu = 3;
  double alpha = 1.5;
  ShiftTuple shifts{std::vector<int>{0}};
  SchemeWeights weights;
  std::vector<double> phi;  // phi_0..phi_K

  int order() const noexcept { return shifts.order(); }
  int m() const noexcept { return shifts.m(); }
  /// True only for the tuple of ShiftTuple::stable_default() with nu in {3,4}.
  bool stability_verified() const noexcept;
};

/// Scheme whose phi covers grids with up to (phi_last - m) intervals.
WsldScheme make_scheme(int nu, double alpha, const ShiftTuple& shifts, std::size_t phi_last);
/// Scheme with phi sized for an N_x-interval grid (K = 4 N_x).
WsldScheme scheme_for_grid(int nu, double alpha, const ShiftTuple& shifts, std::size_t nx);

struct OperatorMatrix {
  Side side = Side::left;
  bool scaled = false;  // true once h^{-alpha} has been applied
  DenseMatrix entries;

  std::size_t n() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// (N_x+1) x (N_x+1) left operator, entry (i,j) = phi_{i-j+m}. Requires N_x >= 2
/// and N_x > m.
OperatorMatrix assemble_left(const WsldScheme& scheme, std::size_t nx);
/// Transpose of assemble_left.
OperatorMatrix assemble_right(const WsldScheme& scheme, std::size_t nx);
OperatorMatrix assemble(const WsldScheme& scheme, std::size_t nx, Side side);

/// Multiplies the matrix by h^{-alpha}; no-op if already scaled.
void apply_scale(OperatorMatrix& op, double alpha, double h);

/// h^{-alpha} sum_k phi_k u_{i-k+m} (left) or u_{i+k-m} (right), by direct
/// summation; nodes outside the grid count as zero.
std::vector<double> apply_operator(std::span<const double> u, const WsldScheme& scheme, double h,
                                   Side side = Side::left);

}  // namespace wsld
