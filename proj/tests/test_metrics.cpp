#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "spnt/errors.hpp"
#include "spnt/metrics.hpp"
#include "spnt/smooth.hpp"
#include "spnt/specfun.hpp"

namespace {

constexpr double kGamma1 = 14.134725141734694;

// Dense-grid minimum of f over [lo, hi].
double brute_min(const std::function<double(double)>& f, double lo, double hi, int points = 1'000'000) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) best = std::min(best, f(lo + (hi - lo) * i / (points - 1.0)));
  return best;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("W for one zero") {
    const spnt::ZeroSet one({{0.5, kGamma1}}, kGamma1);
    const double x = 1e4;
    const double want = 2.0 * std::abs(spnt::gamma_complex({1.5, kGamma1})) * std::sqrt(x) / kGamma1;
    CHECK(spnt::zero_sum_W(x, one) == doctest::Approx(want).epsilon(1e-14));
    CHECK(spnt::zero_sum_W(4 * x, one) > spnt::zero_sum_W(x, one));
    CHECK(2.0 * std::abs(spnt::gamma_complex({1.5, kGamma1})) / kGamma1 == doctest::Approx(1.14e-9).epsilon(0.01));
    CHECK_THROWS_AS(spnt::zero_sum_W(10.0, spnt::ZeroSet{}), spnt::EmptySetError);
  }

  TEST_CASE("W is dominated by the first zero") {
    const spnt::ZeroSet zeros = spnt::builtin_zeros();
    const double x = 1e6;
    const spnt::ZeroSet first = zeros.truncated(15.0);
    CHECK(spnt::zero_sum_W(x, first) > 0.999 * spnt::zero_sum_W(x, zeros));
  }

  TEST_CASE("omega over a finite zero set") {
    const spnt::ZeroSet zeros = spnt::builtin_zeros();
    for (double x : {10.0, 1e3, 1e9}) {
      CHECK(spnt::omega_zero(x, zeros) == doctest::Approx(0.5 * std::log(x) + std::log(kGamma1)).epsilon(1e-14));
    }
    // an off-line zero wins once x is large
    const spnt::ZeroSet mixed({{0.5, kGamma1}, {0.5, 21.022039638771555}, {0.9, 100.0}}, 100.0);
    const double x = std::exp(100.0);
    CHECK(spnt::omega_zero(x, mixed) == doctest::Approx(0.1 * 100.0 + std::log(100.0)));
    const spnt::ZeroSet single({{0.7, 30.0}}, 30.0);
    CHECK(spnt::omega_zero(50.0, single) == doctest::Approx(0.3 * std::log(50.0) + std::log(30.0)).epsilon(1e-15));
    CHECK_THROWS_AS(spnt::omega_zero(1.0, single), spnt::RangeError);
  }

  TEST_CASE("omega_eta and varpi with eta = 1/2") {
    const auto half = spnt::EtaFunction::constant(0.5);
    for (double x : {std::exp(1.0), 1e3, 1e6}) {
      const spnt::Minimum oe = spnt::omega_eta(x, half);
      CHECK(oe.value == doctest::Approx(0.5 * std::log(x)).epsilon(1e-14));
      CHECK(oe.argmin == 1.0);
      const spnt::Minimum vp = spnt::varpi(x, half);
      CHECK(vp.value == doctest::Approx(0.5 * std::log(x)).epsilon(1e-14));
      CHECK(vp.argmin == 0.0);
    }
  }

  TEST_CASE("minimizers against dense grids") {
    for (const auto& eta : {spnt::EtaFunction::classical(0.1), spnt::EtaFunction::constant(0.2),
                            spnt::EtaFunction::classical(2.0)}) {
      for (double x : {1e3, 1e6}) {
        const double lx = std::log(x);
        const double oe = spnt::omega_eta(x, eta).value;
        const double oe_ref = brute_min([&](double v) { return eta(std::exp(v)) * lx + v; }, 0.0, 2.0 * lx);
        CHECK(std::abs(oe - oe_ref) <= 1e-4);
        CHECK(oe <= oe_ref + 1e-12);
        const double vp = spnt::varpi(x, eta).value;
        const double vp_ref = brute_min([&](double u) { return eta(u) * lx + u; }, 0.0, lx + 10.0);
        CHECK(std::abs(vp - vp_ref) <= 1e-4);
        CHECK(vp <= eta(0.0) * lx + 1e-12);
      }
    }
  }

  TEST_CASE("monotone in x") {
    const auto eta = spnt::EtaFunction::classical(0.3);
    double prev_oe = -1.0;
    double prev_vp = -1.0;
    for (int i = 0; i <= 30; ++i) {
      const double x = std::pow(10.0, 1.0 + 0.25 * i);
      const double oe = spnt::omega_eta(x, eta).value;
      const double vp = spnt::varpi(x, eta).value;
      CHECK(oe >= prev_oe - 1e-9);
      CHECK(vp >= prev_vp - 1e-9);
      prev_oe = oe;
      prev_vp = vp;
    }
  }

  TEST_CASE("omega_eta does not exceed omega for a consistent region") {
    // zeros: the RH set plus an off-line zero 0.9 + 100i; the region
    // sigma > 1 - eta(t) with eta = 1/2 below t = 99 and 0.1 from t = 100 contains none of them.
    const spnt::ZeroSet zeros({{0.5, kGamma1}, {0.9, 100.0}}, 100.0);
    const auto eta = spnt::EtaFunction::tabulated({{99.0, 0.5}, {100.0, 0.1}});
    for (double x : {1e2, 1e10, std::exp(100.0)}) {
      CHECK(spnt::omega_eta(x, eta).value <= spnt::omega_zero(x, zeros) + 1e-9);
    }
  }

  TEST_CASE("eta profiles") {
    const auto c = spnt::EtaFunction::classical(1.0);
    CHECK(c(0.0) == 0.5);
    CHECK(c(1e6) == doctest::Approx(1.0 / std::log(1e6 + std::exp(1.0))));
    CHECK(c.at_height(1e6, spnt::EtaArgument::LogAbs) == c(std::log(1e6)));
    CHECK(c.at_height(-1e6, spnt::EtaArgument::Abs) == c(1e6));
    const auto t = spnt::EtaFunction::tabulated({{0.0, 0.5}, {10.0, 0.3}, {20.0, 0.1}});
    CHECK(t(-1.0) == 0.5);
    CHECK(t(5.0) == doctest::Approx(0.4));
    CHECK(t(15.0) == doctest::Approx(0.2));
    CHECK(t(100.0) == 0.1);
    CHECK_THROWS_AS(spnt::EtaFunction::tabulated({{0.0, 0.2}, {1.0, 0.3}}), spnt::DomainError);
    CHECK_THROWS_AS(spnt::EtaFunction::tabulated({{1.0, 0.2}, {1.0, 0.1}}), spnt::DomainError);
    CHECK_THROWS_AS(spnt::EtaFunction::constant(0.6), spnt::DomainError);
    CHECK_THROWS_AS(spnt::EtaFunction::classical(0.0), spnt::DomainError);
    std::stringstream file("# u eta\n0 0.5\n\n5 0.25\n");
    const auto parsed = spnt::EtaFunction::parse(file);
    CHECK(parsed(2.5) == doctest::Approx(0.375));
    std::stringstream bad("0 0.5 1\n");
    CHECK_THROWS_AS(spnt::EtaFunction::parse(bad), spnt::ParseError);
  }

  TEST_CASE("log ratios") {
    CHECK(spnt::omega_from_value(50.0, 50.0) == 0.0);
    CHECK(spnt::omega_from_value(50.0, 1.0) == doctest::Approx(std::log(50.0)));
    CHECK_THROWS_AS(spnt::omega_from_value(50.0, 0.0), spnt::DomainError);
    const spnt::LambdaTable t = spnt::build_lambda(50000);
    const spnt::SupAvgMetrics sd = spnt::sup_avg_metrics(spnt::delta_function(t), 1000.0, 64);
    const spnt::MetricsRow row = spnt::make_metrics_row(1000.0, sd.sup, sd.avg.value, 1e-7, 5.0);
    CHECK(row.omega_D == doctest::Approx(std::log(1000.0 / sd.avg.value)).epsilon(1e-14));
    CHECK(row.omega_S <= row.omega_D);
  }
}
