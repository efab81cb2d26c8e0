#pragma once

// Per-row bodies shared by the serial and OpenMP kernels.

#include <algorithm>
#include <span>
#include <stdexcept>

#include "wsld/operators.hpp"

namespace wsld::kernels::detail {

inline void check_convolve(std::span<const double> phi, int m, std::span<const double> u,
                           std::span<double> out) {
  if (u.size() != out.size()) throw std::invalid_argument("convolve: length mismatch");
  if (m < 0 || phi.size() < u.size() + static_cast<std::size_t>(m)) {
    throw std::invalid_argument("convolve: phi shorter than n + m");
  }
}

inline double convolve_row(std::span<const double> phi, long m, std::span<const double> u, long i,
                           Side side) {
  const long n = static_cast<long>(u.size());
  double acc = 0.0;
  if (side == Side::left) {
    // j = i - k + m in [0, n-1], visited in increasing j like a matrix row
    const long k0 = std::max(0L, i + m - (n - 1));
    for (long k = i + m; k >= k0; --k) {
      acc += phi[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(i - k + m)];
    }
  } else {
    // j = i + k - m in [0, n-1]
    const long k0 = std::max(0L, m - i);
    for (long k = k0; k <= n - 1 - i + m; ++k) {
      acc += phi[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(i + k - m)];
    }
  }
  return acc;
}

inline double dot_row(const double* row, std::span<const double> u) {
  double acc = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) acc += row[j] * u[j];
  return acc;
}

}  // namespace wsld::kernels::detail
