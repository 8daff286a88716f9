#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spnt {

inline constexpr std::uint64_t kMaxLambdaLimit = 100'000'000;
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;  // 2 GiB

/// Von Mangoldt values Lambda(n) for 1 <= n <= limit and the Chebyshev
/// prefix sums psi(n).
///
/// Storage is sparse: only prime powers carry a nonzero value, so the table
/// keeps the ascending list of prime powers, log p for each, and the
/// compensated running sum at each. Dense views are materialized on request.
class LambdaTable {
 public:
  std::uint64_t limit() const noexcept { return limit_; }

  /// Lambda(n); zero for n outside [1, limit] or n not a prime power.
  double value(std::uint64_t n) const;

  /// psi(n) = sum_{m <= n} Lambda(m) for 0 <= n <= limit.
  double prefix(std::uint64_t n) const;

  /// Prime powers p^k <= limit, ascending.
  std::span<const std::uint64_t> support() const noexcept { return support_; }
  /// log p for each entry of support().
  std::span<const double> logs() const noexcept { return logs_; }
  /// psi at each entry of support().
  std::span<const double> support_prefix() const noexcept { return prefix_; }

  /// Number of support entries <= n.
  std::size_t count_upto(std::uint64_t n) const;

  /// values[0..n] with values[0] = 0. Requires n <= limit.
  std::vector<double> dense(std::uint64_t n) const;

  /// Bytes a table of the given limit occupies, including the sieve scratch.
  static std::size_t estimated_bytes(std::uint64_t limit);

 private:
  friend LambdaTable build_lambda(std::uint64_t, std::size_t);
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> support_;
  std::vector<double> logs_;
  std::vector<double> prefix_;
};

/// Sieve Lambda(n) for n <= N. Throws RangeError for N outside [1, 1e8] and
/// CapacityError when the estimated footprint exceeds `memory_budget`.
LambdaTable build_lambda(std::uint64_t N, std::size_t memory_budget = kDefaultMemoryBudget);

/// psi(t) = prefix[floor t]. Throws RangeError for t < 0 or t > limit.
double chebyshev_psi(const LambdaTable& table, double t);

}  // namespace spnt
