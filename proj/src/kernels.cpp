#include "spnt/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "spnt/summation.hpp"

namespace spnt::kernels {
namespace {

std::size_t block_count(std::size_t n) { return (n + kReductionBlock - 1) / kReductionBlock; }

template <typename T>
T combine(const std::vector<T>& partial) {
  BasicNeumaierSum<T> total;
  for (const T& v : partial) total.add(v);
  return total.value();
}

}  // namespace

double exp_weighted_sum(std::span<const std::uint64_t> points, std::span<const double> weights,
                        double x) {
  const std::size_t n = std::min(points.size(), weights.size());
  const std::size_t blocks = block_count(n);
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    NeumaierSum s;
    for (std::size_t i = lo; i < hi; ++i) s.add(weights[i] * std::exp(-static_cast<double>(points[i]) / x));
    partial[static_cast<std::size_t>(b)] = s.value();
  }
  return combine(partial);
}

double exp_weighted_sum_serial(std::span<const std::uint64_t> points,
                               std::span<const double> weights, double x) {
  const std::size_t n = std::min(points.size(), weights.size());
  NeumaierSum s;
  for (std::size_t i = 0; i < n; ++i) s.add(weights[i] * std::exp(-static_cast<double>(points[i]) / x));
  return s.value();
}

std::vector<double> convolve_sparse(std::span<const std::uint64_t> a_index,
                                    std::span<const double> a_value, std::span<const double> b,
                                    std::size_t N) {
  std::vector<double> c(N + 1, 0.0);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t ni = 0; ni <= static_cast<std::int64_t>(N); ++ni) {
    const auto n = static_cast<std::uint64_t>(ni);
    double acc = 0.0;
    for (std::size_t j = 0; j < a_index.size() && a_index[j] <= n; ++j) {
      const std::uint64_t rest = n - a_index[j];
      if (rest < b.size()) acc += a_value[j] * b[rest];
    }
    c[static_cast<std::size_t>(n)] = acc;
  }
  return c;
}

std::vector<double> convolve_dense(std::span<const double> a, std::span<const double> b,
                                   std::size_t N) {
  std::vector<double> c(N + 1, 0.0);
  if (a.empty()) return c;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t ni = 0; ni <= static_cast<std::int64_t>(N); ++ni) {
    const auto n = static_cast<std::size_t>(ni);
    double acc = 0.0;
    const std::size_t hi = std::min(n, a.size() - 1);
    for (std::size_t m = 0; m <= hi; ++m) {
      if (n - m < b.size()) acc += a[m] * b[n - m];
    }
    c[n] = acc;
  }
  return c;
}

std::vector<double> convolve_serial(std::span<const double> a, std::span<const double> b,
                                    std::size_t N) {
  std::vector<double> c(N + 1, 0.0);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      if (m < a.size() && n - m < b.size()) c[n] += a[m] * b[n - m];
    }
  }
  return c;
}

double ordered_sum(std::span<const double> values) {
  const std::size_t blocks = block_count(values.size());
  std::vector<double> partial(blocks, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    NeumaierSum s;
    const std::size_t hi = std::min(values.size(), (b + 1) * kReductionBlock);
    for (std::size_t i = b * kReductionBlock; i < hi; ++i) s.add(values[i]);
    partial[b] = s.value();
  }
  return combine(partial);
}

std::complex<double> ordered_sum(std::span<const std::complex<double>> values) {
  ComplexNeumaierSum s;
  for (const auto& v : values) s.add(v);
  return s.value();
}

}  // namespace spnt::kernels
