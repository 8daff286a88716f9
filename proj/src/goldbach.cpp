#include "spnt/goldbach.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "spnt/errors.hpp"
#include "spnt/kernels.hpp"
#include "spnt/summation.hpp"

namespace spnt {
namespace {

constexpr double kContourSeriesFloor = 1e-18;

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};

// base^{*power} truncated to [0, N] by a length L >= 2(N + 1) transform.
std::vector<double> transform_power(const std::vector<double>& base, int power, std::size_t N) {
  std::size_t L = 1;
  while (L < 2 * (N + 1)) L <<= 1;
  const std::size_t bins = L / 2 + 1;
  std::unique_ptr<double, FftwDeleter> real(fftw_alloc_real(L));
  std::unique_ptr<fftw_complex, FftwDeleter> spec(fftw_alloc_complex(bins));
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(L), real.get(), spec.get(), FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(L), spec.get(), real.get(), FFTW_ESTIMATE);
  }

  auto load = [&](const std::vector<double>& v) {
    std::fill(real.get(), real.get() + L, 0.0);
    std::copy_n(v.begin(), std::min(v.size(), N + 1), real.get());
    fftw_execute(forward);
  };

  load(base);
  std::vector<std::complex<double>> base_hat(bins);
  for (std::size_t i = 0; i < bins; ++i) base_hat[i] = {spec.get()[i][0], spec.get()[i][1]};

  std::vector<double> cur(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(N + 1));
  for (int j = 1; j < power; ++j) {
    load(cur);
    for (std::size_t i = 0; i < bins; ++i) {
      const std::complex<double> p = std::complex<double>(spec.get()[i][0], spec.get()[i][1]) * base_hat[i];
      spec.get()[i][0] = p.real();
      spec.get()[i][1] = p.imag();
    }
    fftw_execute(backward);
    const double scale = 1.0 / static_cast<double>(L);
    for (std::size_t n = 0; n <= N; ++n) cur[n] = real.get()[n] * scale;
  }

  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  return cur;
}

std::vector<double> direct_power(const LambdaTable& table, int power, std::size_t N) {
  const std::size_t count = table.count_upto(N);
  const auto index = table.support().first(count);
  const auto value = table.logs().first(count);
  std::vector<double> cur = table.dense(N);
  for (int j = 1; j < power; ++j) cur = kernels::convolve_sparse(index, value, cur, N);
  return cur;
}

bool use_transform(ConvolutionMethod method, std::uint64_t N) {
  return method == ConvolutionMethod::Transform ||
         (method == ConvolutionMethod::Automatic && N > kDirectConvolutionLimit);
}

void check_capacity(const LambdaTable& table, std::uint64_t N, const char* who) {
  if (N > table.limit()) {
    throw CapacityError(std::string(who) + ": N = " + std::to_string(N) + " exceeds the table limit " +
                        std::to_string(table.limit()));
  }
}

double log_tail_term(int k, double x, double n) {
  const double log_n = std::log(n);
  return (k - 1) * log_n + k * std::log(log_n) - n / x;
}

}  // namespace

ConvolutionTable convolve_psik(const LambdaTable& table, int k, std::uint64_t N,
                               ConvolutionMethod method) {
  if (k < 1 || k > 8) throw RangeError("convolve_psik: k must lie in [1, 8]");
  check_capacity(table, N, "convolve_psik");
  ConvolutionTable out;
  out.k = k;
  out.limit = N;
  if (use_transform(method, N)) {
    out.values = transform_power(table.dense(N), k, N);
    for (double& v : out.values) v = std::max(v, 0.0);
  } else {
    out.values = direct_power(table, k, N);
  }
  const auto empty = std::min<std::size_t>(out.values.size(), 2 * static_cast<std::size_t>(k));
  std::fill_n(out.values.begin(), empty, 0.0);
  return out;
}

std::vector<double> psi2_centered(const LambdaTable& table, std::uint64_t N, ConvolutionMethod method) {
  check_capacity(table, N, "psi2_centered");
  std::vector<double> a = table.dense(N);
  for (std::size_t n = 1; n < a.size(); ++n) a[n] -= 1.0;
  if (use_transform(method, N)) {
    std::vector<double> c = transform_power(a, 2, N);
    std::fill_n(c.begin(), std::min<std::size_t>(c.size(), 2), 0.0);
    return c;
  }
  return kernels::convolve_dense(a, a, N);
}

double Fk_tail_bound(int k, double x, std::uint64_t M) {
  if (!(x > 0.0)) throw RangeError("Fk_tail_bound: x must be positive");
  const double next = static_cast<double>(std::max<std::uint64_t>(M, 2)) + 1.0;
  const double log_next = std::log(next);
  const double log_ratio =
      (k - 1) * std::log1p(1.0 / next) + k * std::log1p(std::log1p(1.0 / next) / log_next) - 1.0 / x;
  if (log_ratio >= 0.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_tail_term(k, x, next)) / -std::expm1(log_ratio);
}

std::uint64_t Fk_required_limit(int k, double x, double tol) {
  if (!(tol > 0.0)) throw RangeError("Fk_required_limit: tol must be positive");
  std::uint64_t lo = 2;
  std::uint64_t hi = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(x)));
  if (Fk_tail_bound(k, x, hi) <= tol) {
    if (Fk_tail_bound(k, x, lo) <= tol) return lo;
  } else {
    while (Fk_tail_bound(k, x, hi) > tol) {
      lo = hi;
      if (hi > (std::uint64_t{1} << 60)) throw CapacityError("Fk_required_limit: tolerance unreachable");
      hi *= 2;
    }
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (Fk_tail_bound(k, x, mid) <= tol ? hi : lo) = mid;
  }
  return hi;
}

FkValue smooth_Fk(const ConvolutionTable& conv, double x, double tol) {
  if (!(x > 0.0) || !std::isfinite(x)) throw RangeError("smooth_Fk: x must be positive");
  const double tail = Fk_tail_bound(conv.k, x, conv.limit);
  if (!(tail <= tol)) {
    throw CapacityError("smooth_Fk: x = " + std::to_string(x) + " needs a convolution table up to " +
                        std::to_string(Fk_required_limit(conv.k, x, tol)) + ", have " +
                        std::to_string(conv.limit));
  }
  std::vector<double> terms(conv.values.size());
  for (std::size_t n = 0; n < terms.size(); ++n) {
    terms[n] = conv.values[n] == 0.0 ? 0.0 : conv.values[n] * std::exp(-static_cast<double>(n) / x);
  }
  return {kernels::ordered_sum(terms), tail};
}

std::uint64_t contour_cutoff(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("contour radius must lie in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(std::log(kContourSeriesFloor) / std::log(r)));
}

std::size_t contour_min_nodes(std::uint64_t N, double r) {
  return static_cast<std::size_t>(2 * (contour_cutoff(r) + N) + 1);
}

ContourResult contour_extract(const LambdaTable& table, std::uint64_t N, double r, std::size_t nodes,
                              ContourMode mode) {
  const std::uint64_t cutoff = contour_cutoff(r);
  const std::size_t min_nodes = contour_min_nodes(N, r);
  if (nodes < min_nodes) {
    throw AliasError("contour_extract: " + std::to_string(nodes) + " nodes alias; need at least " +
                     std::to_string(min_nodes));
  }
  check_capacity(table, cutoff, "contour_extract");

  const std::vector<double> lambda = table.dense(cutoff);
  const double log_r = std::log(r);
  std::vector<double> coeff(cutoff + 1, 0.0);  // (Lambda(n) - 1) r^n
  for (std::size_t n = 1; n <= cutoff; ++n) coeff[n] = (lambda[n] - 1.0) * std::exp(static_cast<double>(n) * log_r);
  std::vector<double> kernel(N + 1);  // r^{-n}
  for (std::size_t n = 0; n <= N; ++n) kernel[n] = std::exp(-static_cast<double>(n) * log_r);

  // Unit roots indexed by (n j) mod nodes keep every phase exact.
  std::vector<std::complex<double>> root(nodes);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(nodes);
  for (std::size_t m = 0; m < nodes; ++m) root[m] = std::polar(1.0, step * static_cast<double>(m));

  const auto samples = kernels::parallel_map<std::complex<double>>(nodes, [&](std::size_t j) {
    ComplexNeumaierSum g;
    std::size_t phase = 0;
    for (std::size_t n = 1; n <= cutoff; ++n) {
      phase += j;
      if (phase >= nodes) phase %= nodes;
      g.add(coeff[n] * root[phase]);
    }
    ComplexNeumaierSum kn;
    phase = 0;
    for (std::size_t n = 0; n <= N; ++n) {
      kn.add(kernel[n] * std::conj(root[phase]));
      phase += j;
      if (phase >= nodes) phase %= nodes;
    }
    const std::complex<double> gz = g.value();
    return (mode == ContourMode::Squared ? gz * gz : gz) * kn.value();
  });

  const std::complex<double> mean = kernels::ordered_sum(samples) / static_cast<double>(nodes);
  return {mean.real(), mean.imag(), cutoff, nodes};
}

}  // namespace spnt
