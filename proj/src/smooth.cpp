#include "spnt/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "spnt/errors.hpp"
#include "spnt/kernels.hpp"

namespace spnt {
namespace {

void check_scale(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw RangeError("smoothed sums require a finite x > 0");
}

void check_tol(double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw RangeError("tolerance must lie in (0, 1)");
}

void check_grid(int grid) {
  if (grid < 16) throw RangeError("grid must have at least 16 intervals, got " + std::to_string(grid));
}

double trapezoid(const std::vector<double>& u, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) acc += 0.5 * (u[i] - u[i - 1]) * (f[i] + f[i - 1]);
  return acc;
}

struct GridSamples {
  std::vector<double> points;
  std::vector<double> abs_delta;
};

GridSamples sample(const DeltaFunction& delta_fn, double x, int grid) {
  GridSamples s;
  s.points = hybrid_grid(x, grid);
  s.abs_delta = kernels::parallel_map<double>(
      s.points.size(), [&](std::size_t i) { return std::abs(delta_fn(s.points[i])); });
  return s;
}

AverageMetric average_from(const DeltaFunction& delta_fn, const GridSamples& fine, double x,
                           int grid) {
  AverageMetric out;
  out.value = trapezoid(fine.points, fine.abs_delta) / x;

  std::map<double, double> known;
  for (std::size_t i = 0; i < fine.points.size(); ++i) known.emplace(fine.points[i], fine.abs_delta[i]);
  const std::vector<double> coarse = hybrid_grid(x, std::max(grid / 2, 16));
  std::vector<double> coarse_f(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    auto it = known.find(coarse[i]);
    coarse_f[i] = it != known.end() ? it->second : std::abs(delta_fn(coarse[i]));
  }
  const double coarse_value = trapezoid(coarse, coarse_f) / x;
  out.error = std::abs(out.value - coarse_value) / 3.0;
  return out;
}

}  // namespace

double smooth_baseline(double x) {
  check_scale(x);
  return 1.0 / std::expm1(1.0 / x);
}

double psi_tail_bound(double x, std::uint64_t M) {
  check_scale(x);
  const double next = static_cast<double>(M) + 1.0;
  const double log_next = std::log(next);
  // log of the summand ratio f(n+1)/f(n) at n = M + 1
  const double log_ratio = std::log1p(std::log1p(1.0 / next) / log_next) - 1.0 / x;
  if (log_ratio >= 0.0) return std::numeric_limits<double>::infinity();
  const double first = log_next * std::exp(-next / x);
  return first / -std::expm1(log_ratio);
}

std::uint64_t smooth_cutoff(double x, double tol) {
  check_scale(x);
  check_tol(tol);
  const std::uint64_t start = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(10.0 * x)));
  if (psi_tail_bound(x, start) <= tol) return start;
  std::uint64_t lo = start;
  std::uint64_t hi = start;
  while (psi_tail_bound(x, hi) > tol) {
    lo = hi;
    if (hi > (std::uint64_t{1} << 60)) throw CapacityError("smooth_cutoff: tolerance unreachable");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (psi_tail_bound(x, mid) <= tol ? hi : lo) = mid;
  }
  return hi;
}

PsiValue smooth_psi(const LambdaTable& table, double x, double tol) {
  check_scale(x);
  const std::uint64_t cutoff = smooth_cutoff(x, tol);
  if (cutoff > table.limit()) {
    throw CapacityError("smooth_psi: x = " + std::to_string(x) + " needs a table up to " +
                        std::to_string(cutoff) + ", have " + std::to_string(table.limit()));
  }
  const std::size_t count = table.count_upto(cutoff);
  PsiValue out;
  out.x = x;
  out.cutoff = cutoff;
  out.tail_bound = psi_tail_bound(x, cutoff);
  out.psi = kernels::exp_weighted_sum(table.support().first(count), table.logs().first(count), x);
  return out;
}

SmoothedPoint delta(const LambdaTable& table, double x, double tol) {
  const PsiValue p = smooth_psi(table, x, tol);
  SmoothedPoint out;
  out.x = x;
  out.psi = p.psi;
  out.baseline = smooth_baseline(x);
  out.delta = out.psi - out.baseline;
  out.cutoff = p.cutoff;
  out.tail_bound = p.tail_bound;
  return out;
}

DeltaFunction delta_function(const LambdaTable& table, double tol) {
  check_tol(tol);
  return [&table, tol](double u) { return u <= 0.0 ? 0.0 : delta(table, u, tol).delta; };
}

std::vector<double> hybrid_grid(double x, int grid) {
  check_scale(x);
  check_grid(grid);
  const double g = static_cast<double>(grid);
  std::vector<double> pts;
  pts.reserve(3 * static_cast<std::size_t>(grid) + 4);
  const double head = std::min(1.0, x);
  for (int j = 0; j <= grid; ++j) pts.push_back(head * (static_cast<double>(j) / g));
  if (x > 1.0) {
    for (int i = 0; i <= grid; ++i) pts.push_back(std::pow(x, static_cast<double>(i) / g));
    const double b = std::max(1.0, x / 10.0);
    for (int j = 0; j <= grid; ++j) pts.push_back(b + (x - b) * (static_cast<double>(j) / g));
  }
  pts.push_back(x);
  for (double& p : pts) p = std::min(p, x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

SupAvgMetrics sup_avg_metrics(const DeltaFunction& delta_fn, double x, int grid) {
  const GridSamples s = sample(delta_fn, x, grid);
  SupAvgMetrics out;
  out.sup = *std::max_element(s.abs_delta.begin(), s.abs_delta.end());
  out.avg = average_from(delta_fn, s, x, grid);
  return out;
}

double sup_metric(const DeltaFunction& delta_fn, double x, int grid) {
  const GridSamples s = sample(delta_fn, x, grid);
  return *std::max_element(s.abs_delta.begin(), s.abs_delta.end());
}

double sup_metric(const LambdaTable& table, double x, int grid, double tol) {
  return sup_metric(delta_function(table, tol), x, grid);
}

AverageMetric avg_metric(const DeltaFunction& delta_fn, double x, int panels) {
  const GridSamples s = sample(delta_fn, x, panels);
  return average_from(delta_fn, s, x, panels);
}

AverageMetric avg_metric(const LambdaTable& table, double x, int panels, double tol) {
  return avg_metric(delta_function(table, tol), x, panels);
}

}  // namespace spnt
