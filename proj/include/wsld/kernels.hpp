#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version with identical per-element arithmetic order, so results are
// bitwise equal between the two.

#include <cstddef>
#include <functional>
#include <span>

#include "wsld/operators.hpp"

namespace wsld::kernels {

enum class Execution { serial, parallel };

/// Direct Toeplitz convolution on grid nodes 0..n-1 with zero extension:
///   left:  out_i = sum_{k} phi_k u_{i-k+m}
///   right: out_i = sum_{k} phi_k u_{i+k-m}
/// phi must hold at least n + m entries.
void convolve_serial(std::span<const double> phi, int m, std::span<const double> u,
                     std::span<double> out, Side side);
void convolve_parallel(std::span<const double> phi, int m, std::span<const double> u,
                       std::span<double> out, Side side);

/// out = a * u (row-major dense).
void matvec_serial(const DenseMatrix& a, std::span<const double> u, std::span<double> out);
void matvec_parallel(const DenseMatrix& a, std::span<const double> u, std::span<double> out);

struct GridMax {
  double value = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// max over (row, col) of f(row, col); ties keep the lowest linear index.
using GridFn = std::function<double(std::size_t, std::size_t)>;
GridMax grid_max_serial(std::size_t rows, std::size_t cols, const GridFn& f);
GridMax grid_max_parallel(std::size_t rows, std::size_t cols, const GridFn& f);

inline void convolve(std::span<const double> phi, int m, std::span<const double> u,
                     std::span<double> out, Side side, Execution ex = Execution::parallel) {
  ex == Execution::serial ? convolve_serial(phi, m, u, out, side)
                          : convolve_parallel(phi, m, u, out, side);
}

inline void matvec(const DenseMatrix& a, std::span<const double> u, std::span<double> out,
                   Execution ex = Execution::parallel) {
  ex == Execution::serial ? matvec_serial(a, u, out) : matvec_parallel(a, u, out);
}

inline GridMax grid_max(std::size_t rows, std::size_t cols, const GridFn& f,
                        Execution ex = Execution::parallel) {
  return ex == Execution::serial ? grid_max_serial(rows, cols, f)
                                 : grid_max_parallel(rows, cols, f);
}

}  // namespace wsld::kernels
