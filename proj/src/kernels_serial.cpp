#include <limits>
#include <stdexcept>

#include "kernel_rows.hpp"
#include "wsld/kernels.hpp"

namespace wsld::kernels {

void convolve_serial(std::span<const double> phi, int m, std::span<const double> u,
                     std::span<double> out, Side side) {
  detail::check_convolve(phi, m, u, out);
  const long n = static_cast<long>(u.size());
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = detail::convolve_row(phi, m, u, i, side);
}

void matvec_serial(const DenseMatrix& a, std::span<const double> u, std::span<double> out) {
  const auto rows = static_cast<std::size_t>(a.rows());
  const auto cols = static_cast<std::size_t>(a.cols());
  if (u.size() != cols || out.size() != rows) throw std::invalid_argument("matvec: shape mismatch");
  for (std::size_t i = 0; i < rows; ++i) out[i] = detail::dot_row(a.data() + i * cols, u);
}

GridMax grid_max_serial(std::size_t rows, std::size_t cols, const GridFn& f) {
  GridMax best{-std::numeric_limits<double>::infinity(), 0, 0};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = f(r, c);
      if (v > best.value) best = {v, r, c};
    }
  }
  return best;
}

}  // namespace wsld::kernels
