#include "spnt/pintz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "spnt/errors.hpp"
#include "spnt/kernels.hpp"
#include "spnt/optimize.hpp"
#include "spnt/summation.hpp"

namespace spnt {
namespace {

constexpr double kHeadTarget = 1e-10;
constexpr double kMellinMaxError = 1e-4;
constexpr double kMellinStep = 0.02;
constexpr double kLineTailTarget = 1e-14;
constexpr double kUTailTarget = 1e-13;
constexpr double kUSmoothTol = 1e-12;
constexpr double kDeltaEnvelope = 2.0;  // |Delta(u)| <= 2 for u >= 1 throughout the tabulated range
constexpr double kUHeadPoint = 1.0 / 40.0;

// Upper incomplete gamma Gamma(a, T) for T > 2(a - 1): e^{-T} T^{a-1} / (1 - (a-1)/T).
double upper_gamma_bound(double a, double T) {
  const double shrink = std::max(0.0, (a - 1.0) / T);
  return std::exp(-T + (a - 1.0) * std::log(T)) / (1.0 - std::min(shrink, 0.5));
}

// Largest x whose smoothed sums fit in a table of the given limit.
double table_reach(std::uint64_t limit, double tol) {
  double lo = 1.0;
  double hi = static_cast<double>(limit);
  if (smooth_cutoff(lo, tol) > limit) throw CapacityError("table too short for any smoothed sum");
  for (int it = 0; it < 200 && hi - lo > 1e-9 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (smooth_cutoff(mid, tol) <= limit ? lo : hi) = mid;
  }
  return lo;
}

std::vector<double> uniform_nodes(double lo, double hi, std::size_t panels) {
  std::vector<double> v(panels + 1);
  const double h = (hi - lo) / static_cast<double>(panels);
  for (std::size_t i = 0; i <= panels; ++i) v[i] = lo + h * static_cast<double>(i);
  v.back() = hi;
  return v;
}

}  // namespace

void PintzParams::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("Gaussian width k must be positive");
  if (!(rho0.real() > 0.0 && rho0.real() < 1.0)) throw DomainError("Re rho0 must lie in (0, 1)");
  if (!(rho0.imag() > 0.0)) throw DomainError("Im rho0 must be positive");
  if (!std::isfinite(mu)) throw DomainError("mu must be finite");
}

Complex mellin_H_closed(Complex s) {
  if (!(s.real() > 1.0)) throw DomainError("mellin_H_closed: requires Re s > 1");
  return s * gamma_complex(s) * (zeta_logderiv(s) + zeta(s));
}

QuadratureValue mellin_H_quadrature(const LambdaTable& table, Complex s, double upper) {
  const double reach = table_reach(table.limit(), kDefaultSmoothTol);
  if (upper > reach) {
    throw CapacityError("mellin_H_quadrature: upper = " + std::to_string(upper) +
                        " needs a table up to " + std::to_string(smooth_cutoff(upper, kDefaultSmoothTol)));
  }
  return mellin_H_quadrature(delta_function(table), s, upper);
}

QuadratureValue mellin_H_quadrature(const DeltaFunction& delta_fn, Complex s, double upper) {
  const double sigma = s.real();
  if (!(sigma >= 2.0)) throw DomainError("mellin_H_quadrature: requires Re s >= 2");
  if (!(upper >= 1e3)) throw RangeError("mellin_H_quadrature: requires upper >= 1000");
  const double abs_s = std::abs(s);

  // For u <= 1/10, |Delta(u)| <= 2 e^{-1/u}; the head integral is then a
  // multiple of the upper incomplete gamma function.
  QuadratureValue out;
  double a = 0.1;
  auto head = [&](double a) { return 2.0 * abs_s * upper_gamma_bound(sigma, 1.0 / a); };
  while (head(a) > kHeadTarget) a *= 0.9;
  out.u_min = a;
  out.head_bound = head(a);

  const double v_lo = std::log(a);
  const double v_hi = std::log(upper);
  auto panels = static_cast<std::size_t>(std::ceil((v_hi - v_lo) / kMellinStep));
  panels += panels % 4;  // Simpson on both h and 2h
  const std::vector<double> v = uniform_nodes(v_lo, v_hi, panels);
  const std::vector<double> d =
      kernels::parallel_map<double>(v.size(), [&](std::size_t i) { return delta_fn(std::exp(v[i])); });

  auto integrand = [&](std::size_t i) { return d[i] * std::exp(-s * v[i]); };
  auto simpson = [&](std::size_t stride) {
    ComplexNeumaierSum acc;
    const std::size_t n = panels / stride;
    for (std::size_t j = 0; j <= n; ++j) {
      const double w = (j == 0 || j == n) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      acc.add(w * integrand(j * stride));
    }
    const double h = (v_hi - v_lo) / static_cast<double>(n);
    return acc.value() * (h / 3.0);
  };
  const Complex fine = simpson(1);
  const Complex coarse = simpson(2);
  out.value = -s * fine;
  const double discretization = abs_s * std::abs(fine - coarse) / 15.0;

  double envelope = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= v_hi - 1.0) envelope = std::max(envelope, std::abs(d[i]));
  }
  out.tail_bound = 2.0 * envelope * abs_s * std::exp(-sigma * v_hi) / sigma;
  out.error = discretization + out.head_bound + out.tail_bound;
  if (out.error > kMellinMaxError) {
    throw ToleranceError("mellin_H_quadrature: error estimate " + std::to_string(out.error) +
                         " exceeds 1e-4");
  }
  return out;
}

double gaussian_line_height(double kk, double w) {
  if (!(kk > 0.0)) throw DomainError("gaussian_line_check: kk must be positive");
  const double nominal = 10.0 / std::sqrt(kk) + std::abs(w) / kk;
  const double decay = std::sqrt(std::max(0.0, 4.0 * kk + 2.0 * w + 40.0) / kk);
  return std::max(nominal, decay);
}

std::pair<Complex, Complex> gaussian_line_check(double kk, double w, double height) {
  if (!(kk > 0.0)) throw DomainError("gaussian_line_check: kk must be positive");
  const double edge = std::exp(4.0 * kk + 2.0 * w - kk * height * height) / (2.0 * std::numbers::pi);
  if (!(edge <= kLineTailTarget)) {
    throw ToleranceError("gaussian_line_check: integrand at the truncation height is " +
                         std::to_string(edge));
  }
  // On s = 2 + it the integrand is a Gaussian in t with frequency 4kk + w;
  // the step keeps the first alias below e^{-40} of the term size.
  const double freq = std::abs(4.0 * kk + w);
  const double h = 2.0 * std::numbers::pi / (freq + std::sqrt(160.0 * kk));
  const auto J = static_cast<std::int64_t>(std::ceil(height / h));
  auto f = [&](double t) {
    const Complex s(2.0, t);
    return std::exp(kk * s * s + w * s);
  };
  ComplexNeumaierSum acc;
  acc.add(f(0.0));
  for (std::int64_t j = 1; j <= J; ++j) {
    const double t = h * static_cast<double>(j);
    acc.add(f(t) + f(-t));
  }
  const Complex quad = acc.value() * (h / (2.0 * std::numbers::pi));
  const Complex closed = std::exp(-w * w / (4.0 * kk)) / (2.0 * std::sqrt(std::numbers::pi * kk));
  return {quad, closed};
}

double U_tail_bound(const PintzParams& p, double width) {
  const double beta = p.rho0.real();
  const double root_k = std::sqrt(p.k);
  const double gauss = std::abs(p.rho0) * std::sqrt(std::numbers::pi * p.k) *
                           std::erfc(width / (2.0 * root_k)) +
                       std::exp(-width * width / (4.0 * p.k));
  return kDeltaEnvelope / (2.0 * std::sqrt(std::numbers::pi * p.k)) *
         std::exp(-beta * (p.mu + width)) * gauss;
}

namespace {

double width_for(const PintzParams& p, double target) {
  double lo = 0.0;
  double hi = 1.0;
  while (U_tail_bound(p, hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e4) throw ToleranceError("U_integral: tail target unreachable");
  }
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (U_tail_bound(p, mid) > target ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

std::uint64_t U_required_limit(const PintzParams& p, double target) {
  p.validate();
  const double u = std::exp(p.mu + width_for(p, target));
  return smooth_cutoff(u, kUSmoothTol);
}

UValue U_integral(const LambdaTable& table, const PintzParams& p, double tol,
                  const UIntegralOptions& options) {
  return U_integral(delta_function(table, kUSmoothTol), table_reach(table.limit(), kUSmoothTol), p, tol,
                    options);
}

UValue U_integral(const DeltaFunction& delta_fn, double u_max, const PintzParams& p, double tol,
                  const UIntegralOptions& options) {
  p.validate();
  if (!(tol > 0.0 && tol < 1.0)) throw RangeError("U_integral: tol must lie in (0, 1)");
  if (!(options.step > 0.0)) throw RangeError("U_integral: step must be positive");

  const double wanted = width_for(p, kUTailTarget);
  double width = wanted;
  bool capped = false;
  if (p.mu + width > std::log(u_max)) {
    width = std::log(u_max) - p.mu;
    capped = true;
    if (width <= 0.0) {
      throw CapacityError("U_integral: table reaches u = " + std::to_string(u_max) + ", below e^mu");
    }
  }

  const double v_hi = p.mu + width;
  const double v_lo = std::min(p.mu - width, std::log(kUHeadPoint));
  auto panels = static_cast<std::size_t>(std::ceil((v_hi - v_lo) / options.step));
  panels += panels % 2;
  const std::vector<double> v = uniform_nodes(v_lo, v_hi, panels);
  const Complex rho0 = p.rho0;
  const double four_k = 4.0 * p.k;
  const double two_k = 2.0 * p.k;
  const std::vector<Complex> f = kernels::parallel_map<Complex>(v.size(), [&](std::size_t i) {
    const double y = p.mu - v[i];
    const double d = delta_fn(std::exp(v[i]));
    if (d == 0.0) return Complex{};
    return d * std::exp(-rho0 * v[i] - y * y / four_k) * (-rho0 + y / two_k);
  });

  auto trapezoid = [&](std::size_t stride) {
    ComplexNeumaierSum acc;
    const std::size_t n = panels / stride;
    for (std::size_t j = 0; j <= n; ++j) acc.add((j == 0 || j == n ? 0.5 : 1.0) * f[j * stride]);
    return acc.value() * ((v_hi - v_lo) / static_cast<double>(n));
  };
  const double norm = 1.0 / (2.0 * std::sqrt(std::numbers::pi * p.k));
  const Complex fine = trapezoid(1) * norm;
  const Complex coarse = trapezoid(2) * norm;

  // Below u = 1/40, |Delta(u)| <= 2 e^{-1/u}, the Gaussian is at most 1 and
  // |mu - log u| <= |mu| + 1/u.
  const double beta = rho0.real();
  const double T = 1.0 / std::exp(v_lo);
  const double head = 2.0 * norm *
                      ((std::abs(rho0) + std::abs(p.mu) / two_k) * upper_gamma_bound(beta, T) +
                       upper_gamma_bound(beta + 1.0, T) / two_k);

  UValue out;
  out.value = fine;
  out.tail_bound = U_tail_bound(p, width);
  out.error = std::abs(fine - coarse) + head + out.tail_bound;
  out.width = width;
  out.u_max = std::exp(v_hi);
  if (out.error > tol * std::abs(out.value) + 1e-12) {
    if (capped) {
      throw CapacityError("U_integral: error " + std::to_string(out.error) +
                          " too large; a table up to " +
                          std::to_string(smooth_cutoff(std::exp(p.mu + wanted), kUSmoothTol)) +
                          " reaches the full width");
    }
    throw ToleranceError("U_integral: error estimate " + std::to_string(out.error) + " above tolerance");
  }
  return out;
}

UResidueValue U_residue(const ZeroSet& zeros, const PintzParams& p) {
  p.validate();
  if (zeros.empty()) throw EmptySetError("U_residue: empty zero set");
  auto weight = [&](Complex z) {
    const Complex d = z - p.rho0;
    return std::exp(p.k * d * d + p.mu * d);
  };
  UResidueValue out;
  out.pole_term = weight(Complex(1.0, 0.0));
  ComplexNeumaierSum sum;
  for (const Zero& z : zeros.zeros()) {
    for (const Complex rho : {Complex(z.beta, z.gamma), Complex(z.beta, -z.gamma)}) {
      sum.add(gamma_complex(rho) * rho * weight(rho));
    }
  }
  out.zero_sum = sum.value();
  out.value = out.pole_term + out.zero_sum;
  out.remainder_bound = std::exp(-p.mu + 9.0 * p.k / 4.0);
  return out;
}

TuranResult turan_bound(std::span<const Complex> alphas, double a, double b, int refine) {
  const std::size_t n = alphas.size();
  if (n < 1 || n > 32) throw RangeError("turan_bound: need 1 to 32 exponents");
  if (!(a > 0.0 && a <= 100.0 && b > 0.0 && b <= 100.0)) throw RangeError("turan_bound: a, b must lie in (0, 100]");
  if (refine < 1) throw RangeError("turan_bound: refine must be at least 1");
  double top = -std::numeric_limits<double>::infinity();
  for (const Complex& z : alphas) top = std::max(top, z.real());
  if (std::abs(alphas[0].real()) > 1e-12 || std::abs(top) > 1e-12) {
    throw NormalizationError("turan_bound: expected Re alpha_0 = max Re alpha_j = 0");
  }

  auto negated = [&](double t) {
    Complex s{};
    for (const Complex& z : alphas) s += std::exp(z * t);
    return -std::abs(s);
  };
  const int points = 10'000 * refine;
  const Minimum m = grid_golden_minimize(negated, a, a + b, points + 1);
  TuranResult out;
  out.grid_max = -m.value;
  out.argmax = m.argmin;
  out.bound = std::pow(b / (8.0 * std::numbers::e * (a + b)), static_cast<double>(n));
  return out;
}

std::vector<TuranInstance> random_turan_instances(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_real_distribution<double> re(-1.0, 0.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  std::uniform_real_distribution<double> ab(1.0, 10.0);
  std::vector<TuranInstance> out(static_cast<std::size_t>(std::max(count, 0)));
  for (TuranInstance& inst : out) {
    const int n = size(rng);
    inst.alphas.emplace_back(0.0, im(rng));
    for (int j = 1; j < n; ++j) {
      const double x = re(rng);
      inst.alphas.emplace_back(x, im(rng));
    }
    inst.a = ab(rng);
    inst.b = ab(rng);
  }
  return out;
}

}  // namespace spnt
