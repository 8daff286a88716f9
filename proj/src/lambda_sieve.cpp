#include "spnt/lambda_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "spnt/errors.hpp"
#include "spnt/summation.hpp"

namespace spnt {

double LambdaTable::value(std::uint64_t n) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), n);
  if (it == support_.end() || *it != n) return 0.0;
  return logs_[static_cast<std::size_t>(it - support_.begin())];
}

std::size_t LambdaTable::count_upto(std::uint64_t n) const {
  return static_cast<std::size_t>(std::upper_bound(support_.begin(), support_.end(), n) - support_.begin());
}

double LambdaTable::prefix(std::uint64_t n) const {
  if (n > limit_) throw RangeError("LambdaTable::prefix: n = " + std::to_string(n) + " beyond limit");
  const std::size_t count = count_upto(n);
  return count == 0 ? 0.0 : prefix_[count - 1];
}

std::vector<double> LambdaTable::dense(std::uint64_t n) const {
  if (n > limit_) throw CapacityError("LambdaTable::dense: n = " + std::to_string(n) + " beyond limit");
  std::vector<double> values(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t i = 0; i < support_.size() && support_[i] <= n; ++i) values[support_[i]] = logs_[i];
  return values;
}

std::size_t LambdaTable::estimated_bytes(std::uint64_t limit) {
  const double n = static_cast<double>(std::max<std::uint64_t>(limit, 16));
  const double entries = 1.3 * n / std::log(n) + 64.0;
  return static_cast<std::size_t>(n / 2.0 + 2.0 * 24.0 * entries);
}

LambdaTable build_lambda(std::uint64_t N, std::size_t memory_budget) {
  if (N < 1 || N > kMaxLambdaLimit) {
    throw RangeError("build_lambda: N = " + std::to_string(N) + " outside [1, 1e8]");
  }
  if (LambdaTable::estimated_bytes(N) > memory_budget) {
    throw CapacityError("build_lambda: N = " + std::to_string(N) + " exceeds the memory budget");
  }

  // composite[i] marks the odd number 2i + 1
  const std::uint64_t half = N / 2 + 1;
  std::vector<std::uint8_t> composite(half, 0);
  for (std::uint64_t p = 3; p * p <= N; p += 2) {
    if (composite[p / 2]) continue;
    for (std::uint64_t m = p * p; m <= N; m += 2 * p) composite[m / 2] = 1;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> powers;  // (p^k, p)
  powers.reserve(static_cast<std::size_t>(1.3 * static_cast<double>(N) / std::log(std::max<double>(N, 3.0))) + 64);
  auto push_powers = [&](std::uint64_t p) {
    for (std::uint64_t q = p;; q *= p) {
      powers.emplace_back(q, p);
      if (q > N / p) break;
    }
  };
  if (N >= 2) push_powers(2);
  for (std::uint64_t n = 3; n <= N; n += 2) {
    if (!composite[n / 2]) push_powers(n);
  }
  composite.clear();
  composite.shrink_to_fit();
  std::sort(powers.begin(), powers.end());

  LambdaTable table;
  table.limit_ = N;
  table.support_.reserve(powers.size());
  table.logs_.reserve(powers.size());
  table.prefix_.reserve(powers.size());
  NeumaierSum running;
  for (const auto& [q, p] : powers) {
    const double lp = std::log(static_cast<double>(p));
    running.add(lp);
    table.support_.push_back(q);
    table.logs_.push_back(lp);
    table.prefix_.push_back(running.value());
  }
  return table;
}

double chebyshev_psi(const LambdaTable& table, double t) {
  if (!(t >= 0.0)) throw RangeError("chebyshev_psi: t must be non-negative");
  if (t > static_cast<double>(table.limit())) throw RangeError("chebyshev_psi: t beyond the table limit");
  return table.prefix(static_cast<std::uint64_t>(std::floor(t)));
}

}  // namespace spnt
