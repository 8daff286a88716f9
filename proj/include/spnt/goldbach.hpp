#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spnt/lambda_sieve.hpp"

namespace spnt {

/// Sequences at or below this length are convolved directly; longer ones
/// go through a real-to-complex transform.
inline constexpr std::size_t kDirectConvolutionLimit = 20'000;

/// psi_k(n) = sum over ordered m_1 + ... + m_k = n of Lambda(m_1)...Lambda(m_k),
/// for 0 <= n <= limit. values[n] == 0 for n < 2k.
struct ConvolutionTable {
  int k = 1;
  std::uint64_t limit = 0;
  std::vector<double> values;
};

enum class ConvolutionMethod { Automatic, Direct, Transform };

/// k-fold self-convolution of Lambda truncated at N. Requires 1 <= k <= 8
/// (RangeError) and N <= table.limit() (CapacityError).
ConvolutionTable convolve_psik(const LambdaTable& table, int k, std::uint64_t N,
                               ConvolutionMethod method = ConvolutionMethod::Automatic);

/// psi_2^0(n) = sum_{m + m' = n} (Lambda(m) - 1)(Lambda(m') - 1) for 0 <= n <= N.
std::vector<double> psi2_centered(const LambdaTable& table, std::uint64_t N,
                                  ConvolutionMethod method = ConvolutionMethod::Automatic);

/// Bound on sum_{n > M} n^{k-1} (log n)^k e^{-n/x}, which dominates the tail
/// of F_k since psi_k(n) <= n^{k-1} (log n)^k.
double Fk_tail_bound(int k, double x, std::uint64_t M);

/// Smallest M with Fk_tail_bound(k, x, M) <= tol.
std::uint64_t Fk_required_limit(int k, double x, double tol);

struct FkValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// F_k(x) = sum_n psi_k(n) e^{-n/x}, within `tol` (absolute) of the full series.
/// Throws CapacityError, naming the limit needed, when conv.limit is too short.
FkValue smooth_Fk(const ConvolutionTable& conv, double x, double tol);

enum class ContourMode {
  Squared,  // (G(z))^2 K_N(z): extracts sum_{n <= N} psi_2^0(n)
  Literal,  // G(z) K_N(z): extracts sum_{n <= N} (Lambda(n) - 1)
};

struct ContourResult {
  double value = 0.0;
  double imag = 0.0;  // should vanish: the series has real coefficients
  std::uint64_t cutoff = 0;
  std::size_t nodes = 0;
};

/// Power-series cutoff for radius r: the first n with r^n < 1e-18.
std::uint64_t contour_cutoff(double r);

/// Smallest node count free of aliasing: 2 (cutoff(r) + N) + 1.
std::size_t contour_min_nodes(std::uint64_t N, double r);

/// (1 / 2 pi i) times the integral over |z| = r of F(z) K_N(z) dz / z, where
/// G(z) = sum_{n >= 1} (Lambda(n) - 1) z^n truncated at contour_cutoff(r),
/// K_N(z) = sum_{0 <= n <= N} z^{-n}, and F = G^2 or G by `mode`. Uniform
/// trapezoid rule on `nodes` points. Requires 0 < r < 1 (DomainError), enough
/// nodes (AliasError) and a table covering the cutoff (CapacityError).
ContourResult contour_extract(const LambdaTable& table, std::uint64_t N, double r,
                              std::size_t nodes, ContourMode mode = ContourMode::Squared);

}  // namespace spnt
