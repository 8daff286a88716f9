#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a serial reference kept
// for tests and the benchmark. Reductions use a fixed block partition that
// does not depend on the thread count, so results are bit-identical across
// runs and schedules.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <vector>

namespace spnt::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

/// sum_i weights[i] * exp(-points[i] / x) over the first `count` entries.
double exp_weighted_sum(std::span<const std::uint64_t> points, std::span<const double> weights,
                        double x);
double exp_weighted_sum_serial(std::span<const std::uint64_t> points,
                               std::span<const double> weights, double x);

/// Truncated additive convolution c[n] = sum_{m} a[m] b[n - m], 0 <= n <= N,
/// where `a` is given sparsely by (index, value) pairs. Parallel over n.
std::vector<double> convolve_sparse(std::span<const std::uint64_t> a_index,
                                    std::span<const double> a_value, std::span<const double> b,
                                    std::size_t N);
/// Same for dense a.
std::vector<double> convolve_dense(std::span<const double> a, std::span<const double> b,
                                   std::size_t N);
/// Plain O(N^2) double loop; the reference for both.
std::vector<double> convolve_serial(std::span<const double> a, std::span<const double> b,
                                    std::size_t N);

/// Compensated sum of a sequence in index order (deterministic block split).
double ordered_sum(std::span<const double> values);
std::complex<double> ordered_sum(std::span<const std::complex<double>> values);

/// Evaluate f(i) for i in [0, count) in parallel; results in index order.
/// The first exception thrown by any f(i) is rethrown on the calling thread.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, F&& f) {
  std::vector<R> out(count);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(spnt_parallel_map)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <typename R, typename F>
std::vector<R> serial_map(std::size_t count, F&& f) {
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

}  // namespace spnt::kernels
