#include <omp.h>

#include <limits>
#include <stdexcept>
#include <vector>

#include "kernel_rows.hpp"
#include "wsld/kernels.hpp"

namespace wsld::kernels {

namespace {
// Below this many multiply-adds the thread start-up dominates.
constexpr std::size_t kParallelWork = 1 << 14;
}  // namespace

void convolve_parallel(std::span<const double> phi, int m, std::span<const double> u,
                       std::span<double> out, Side side) {
  detail::check_convolve(phi, m, u, out);
  const long n = static_cast<long>(u.size());
  const bool big = u.size() * u.size() >= kParallelWork;
#pragma omp parallel for schedule(dynamic, 16) if (big)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = detail::convolve_row(phi, m, u, i, side);
}

void matvec_parallel(const DenseMatrix& a, std::span<const double> u, std::span<double> out) {
  const auto rows = static_cast<long>(a.rows());
  const auto cols = static_cast<std::size_t>(a.cols());
  if (u.size() != cols || out.size() != static_cast<std::size_t>(rows)) {
    throw std::invalid_argument("matvec: shape mismatch");
  }
  const bool big = static_cast<std::size_t>(rows) * cols >= kParallelWork;
#pragma omp parallel for schedule(static) if (big)
  for (long i = 0; i < rows; ++i) {
    out[static_cast<std::size_t>(i)] = detail::dot_row(a.data() + static_cast<std::size_t>(i) * cols, u);
  }
}

GridMax grid_max_parallel(std::size_t rows, std::size_t cols, const GridFn& f) {
  const long total = static_cast<long>(rows * cols);
  const int threads = omp_get_max_threads();
  std::vector<GridMax> partial(static_cast<std::size_t>(threads),
                               {-std::numeric_limits<double>::infinity(), 0, 0});
  std::vector<long> partial_index(static_cast<std::size_t>(threads), total);
#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
#pragma omp for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
      const auto r = static_cast<std::size_t>(idx) / cols;
      const auto c = static_cast<std::size_t>(idx) % cols;
      const double v = f(r, c);
      if (v > partial[t].value) {
        partial[t] = {v, r, c};
        partial_index[t] = idx;
      }
    }
  }
  // Each thread scans an increasing index range, so its first maximum is its
  // lowest-index one; merge the same way.
  GridMax best = partial[0];
  long best_index = partial_index[0];
  for (std::size_t t = 1; t < partial.size(); ++t) {
    if (partial[t].value > best.value ||
        (partial[t].value == best.value && partial_index[t] < best_index)) {
      best = partial[t];
      best_index = partial_index[t];
    }
  }
  return best;
}

}  // namespace wsld::kernels
