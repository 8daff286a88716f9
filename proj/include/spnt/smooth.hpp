#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spnt/lambda_sieve.hpp"

namespace spnt {

inline constexpr double kDefaultSmoothTol = 1e-10;

/// Psi(x) = sum_n Lambda(n) e^{-n/x}, truncated at `cutoff` with a certified
/// bound on the omitted tail.
struct PsiValue {
  double x = 0.0;
  double psi = 0.0;
  std::uint64_t cutoff = 0;
  double tail_bound = 0.0;
};

/// Psi(x), I(x) = sum_n e^{-n/x} and Delta(x) = Psi(x) - I(x) at one scale.
struct SmoothedPoint {
  double x = 0.0;
  double psi = 0.0;
  double baseline = 0.0;
  double delta = 0.0;
  std::uint64_t cutoff = 0;
  double tail_bound = 0.0;
};

/// I(x) = 1 / (e^{1/x} - 1), via expm1. Throws RangeError for x <= 0.
double smooth_baseline(double x);

/// Bound on sum_{n > M} (log n) e^{-n/x}: the summand ratio is decreasing, so
/// the tail is dominated by a geometric series started at n = M + 1.
double psi_tail_bound(double x, std::uint64_t M);

/// Smallest M >= max(2, 10x) with psi_tail_bound(x, M) <= tol.
std::uint64_t smooth_cutoff(double x, double tol);

/// Throws RangeError for x <= 0 or tol outside (0, 1), CapacityError when the
/// table is shorter than the cutoff.
PsiValue smooth_psi(const LambdaTable& table, double x, double tol = kDefaultSmoothTol);

SmoothedPoint delta(const LambdaTable& table, double x, double tol = kDefaultSmoothTol);

/// Delta as a function of u > 0, with the limit value 0 at u = 0.
using DeltaFunction = std::function<double(double)>;
DeltaFunction delta_function(const LambdaTable& table, double tol = kDefaultSmoothTol);

/// Sample points for S(x) and D(x): {0} and a linear grid on [0, min(1, x)],
/// a geometric grid on [1, x], a linear grid on [max(1, x/10), x], and x.
/// Each part has `grid` intervals, so the grid for g is a subset of the grid
/// for 2g. Sorted, without duplicates.
std::vector<double> hybrid_grid(double x, int grid);

struct AverageMetric {
  double value = 0.0;
  double error = 0.0;  // Richardson estimate from the grid with half as many intervals
};

struct SupAvgMetrics {
  double sup = 0.0;
  AverageMetric avg;
};

/// S(x) = max |Delta(u)| over hybrid_grid(x, grid), a lower bound for the
/// maximum over [0, x]. Throws RangeError for grid < 16.
double sup_metric(const LambdaTable& table, double x, int grid, double tol = kDefaultSmoothTol);
double sup_metric(const DeltaFunction& delta_fn, double x, int grid);

/// D(x) = (1/x) int_0^x |Delta(u)| du by the composite trapezoid rule on
/// hybrid_grid(x, panels).
AverageMetric avg_metric(const LambdaTable& table, double x, int panels,
                         double tol = kDefaultSmoothTol);
AverageMetric avg_metric(const DeltaFunction& delta_fn, double x, int panels);

/// S and D from one set of Delta evaluations on the same grid.
SupAvgMetrics sup_avg_metrics(const DeltaFunction& delta_fn, double x, int grid);

}  // namespace spnt
