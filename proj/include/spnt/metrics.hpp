#pragma once

#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include "spnt/optimize.hpp"
#include "spnt/zeros.hpp"

namespace spnt {

enum class EtaKind { Constant, Classical, Tabulated };

/// How a zero-free-region profile is applied to a zero at height t:
/// sigma > 1 - eta(log|t|) or sigma > 1 - eta(|t|). Both appear in the
/// literature this library follows; neither is preferred.
enum class EtaArgument { LogAbs, Abs };

/// Zero-free-region profile eta(u): non-increasing, valued in (0, 1/2].
class EtaFunction {
 public:
  /// eta == c; requires 0 < c <= 1/2.
  static EtaFunction constant(double c);
  /// eta(u) = c / max(log(u + e), 1), clamped to 1/2; requires c > 0.
  static EtaFunction classical(double c);
  /// Piecewise-linear through (u, eta) pairs with u strictly ascending,
  /// constant outside the table. Throws DomainError on a violated invariant.
  static EtaFunction tabulated(std::vector<std::pair<double, double>> table);
  /// Text file of "u value" pairs; '#' comment lines.
  static EtaFunction parse(std::istream& in);
  static EtaFunction load(const std::filesystem::path& path);

  double operator()(double u) const;
  double at_height(double t, EtaArgument convention) const;

  EtaKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return c_; }

 private:
  EtaKind kind_ = EtaKind::Constant;
  double c_ = 0.5;
  std::vector<std::pair<double, double>> table_;
};

struct MetricsRow {
  double x = 0.0;
  double S = 0.0;
  double D = 0.0;
  double W = 0.0;
  double omega = 0.0;
  double omega_S = 0.0;
  double omega_D = 0.0;
  double omega_W = 0.0;
};

/// Fill the omega_V = log(x / V) columns from x, S, D, W and omega.
MetricsRow make_metrics_row(double x, double S, double D, double W, double omega);

/// W(x) = 2 sum |Gamma(rho + 1)| x^beta / gamma over the stored zeros
/// (the factor 2 accounts for the conjugates). Requires x >= 1.
double zero_sum_W(double x, const ZeroSet& zeros);

/// omega(x) = min over stored zeros of (1 - beta) log x + log gamma. Requires x > 1.
double omega_zero(double x, const ZeroSet& zeros);

/// omega_eta(x) = inf_{t >= 1} (eta(t) log x + log t), searched over
/// t in [1, x^2]; argmin is the minimizing t.
Minimum omega_eta(double x, const EtaFunction& eta);

/// varpi(x) = min_{u >= 0} (eta(u) log x + u), searched over u in [0, log x + 10].
Minimum varpi(double x, const EtaFunction& eta);

/// log(x / v). Throws DomainError for v <= 0 or x <= 0.
double omega_from_value(double x, double v);

}  // namespace spnt
