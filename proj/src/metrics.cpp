#include "spnt/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "spnt/errors.hpp"
#include "spnt/specfun.hpp"
#include "spnt/summation.hpp"

namespace spnt {
namespace {

void require_zeros(const ZeroSet& zeros, const char* who) {
  if (zeros.empty()) throw EmptySetError(std::string(who) + ": empty zero set");
}

}  // namespace

EtaFunction EtaFunction::constant(double c) {
  if (!(c > 0.0 && c <= 0.5)) throw DomainError("constant eta must lie in (0, 1/2]");
  EtaFunction eta;
  eta.kind_ = EtaKind::Constant;
  eta.c_ = c;
  return eta;
}

EtaFunction EtaFunction::classical(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("classical eta needs c > 0");
  EtaFunction eta;
  eta.kind_ = EtaKind::Classical;
  eta.c_ = c;
  return eta;
}

EtaFunction EtaFunction::tabulated(std::vector<std::pair<double, double>> table) {
  if (table.empty()) throw DomainError("tabulated eta needs at least one point");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto [u, v] = table[i];
    if (!(v > 0.0 && v <= 0.5)) throw DomainError("eta values must lie in (0, 1/2]");
    if (i > 0 && !(u > table[i - 1].first)) throw DomainError("eta table: u must be strictly ascending");
    if (i > 0 && v > table[i - 1].second) throw DomainError("eta table: values must be non-increasing");
  }
  EtaFunction eta;
  eta.kind_ = EtaKind::Tabulated;
  eta.table_ = std::move(table);
  return eta;
}

EtaFunction EtaFunction::parse(std::istream& in) {
  std::vector<std::pair<double, double>> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first.front() == '#') continue;
    std::string second;
    std::string extra;
    double u = 0.0;
    double v = 0.0;
    const bool ok = (words >> second) && !(words >> extra) &&
                    std::from_chars(first.data(), first.data() + first.size(), u).ec == std::errc{} &&
                    std::from_chars(second.data(), second.data() + second.size(), v).ec == std::errc{};
    if (!ok) throw ParseError("eta table line " + std::to_string(line_no) + ": expected \"u value\"");
    table.emplace_back(u, v);
  }
  return tabulated(std::move(table));
}

EtaFunction EtaFunction::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open eta table " + path.string());
  return parse(in);
}

double EtaFunction::operator()(double u) const {
  switch (kind_) {
    case EtaKind::Constant:
      return c_;
    case EtaKind::Classical:
      return std::min(0.5, c_ / std::max(std::log(u + std::numbers::e), 1.0));
    case EtaKind::Tabulated: {
      if (u <= table_.front().first) return table_.front().second;
      if (u >= table_.back().first) return table_.back().second;
      auto hi = std::upper_bound(table_.begin(), table_.end(), u,
                                 [](double value, const auto& p) { return value < p.first; });
      auto lo = hi - 1;
      const double w = (u - lo->first) / (hi->first - lo->first);
      return lo->second + w * (hi->second - lo->second);
    }
  }
  return c_;
}

double EtaFunction::at_height(double t, EtaArgument convention) const {
  const double a = std::abs(t);
  return convention == EtaArgument::LogAbs ? (*this)(std::log(std::max(a, 1.0))) : (*this)(a);
}

MetricsRow make_metrics_row(double x, double S, double D, double W, double omega) {
  auto log_ratio = [x](double v) {
    return v > 0.0 ? omega_from_value(x, v) : std::numeric_limits<double>::infinity();
  };
  return {x, S, D, W, omega, log_ratio(S), log_ratio(D), log_ratio(W)};
}

double zero_sum_W(double x, const ZeroSet& zeros) {
  if (!(x >= 1.0)) throw RangeError("zero_sum_W: requires x >= 1");
  require_zeros(zeros, "zero_sum_W");
  const double log_x = std::log(x);
  NeumaierSum sum;
  for (const Zero& z : zeros.zeros()) {
    const Complex rho_plus_one(z.beta + 1.0, z.gamma);
    sum.add(2.0 * std::abs(gamma_complex(rho_plus_one)) * std::exp(z.beta * log_x) / z.gamma);
  }
  return sum.value();
}

double omega_zero(double x, const ZeroSet& zeros) {
  if (!(x > 1.0)) throw RangeError("omega_zero: requires x > 1");
  require_zeros(zeros, "omega_zero");
  const double log_x = std::log(x);
  double best = std::numeric_limits<double>::infinity();
  for (const Zero& z : zeros.zeros()) best = std::min(best, (1.0 - z.beta) * log_x + std::log(z.gamma));
  return best;
}

Minimum omega_eta(double x, const EtaFunction& eta) {
  if (!(x > 1.0)) throw RangeError("omega_eta: requires x > 1");
  const double log_x = std::log(x);
  // search in v = log t over [0, 2 log x]
  const Minimum m = grid_golden_minimize(
      [&](double v) { return eta(std::exp(v)) * log_x + v; }, 0.0, 2.0 * log_x);
  return {m.value, std::exp(m.argmin)};
}

Minimum varpi(double x, const EtaFunction& eta) {
  if (!(x > 1.0)) throw RangeError("varpi: requires x > 1");
  const double log_x = std::log(x);
  return grid_golden_minimize([&](double u) { return eta(u) * log_x + u; }, 0.0, log_x + 10.0);
}

double omega_from_value(double x, double v) {
  if (!(v > 0.0)) throw DomainError("omega_from_value: value must be positive");
  if (!(x > 0.0)) throw DomainError("omega_from_value: x must be positive");
  return std::log(x) - std::log(v);
}

}  // namespace spnt
