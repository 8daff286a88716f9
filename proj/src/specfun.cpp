#include "spnt/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "spnt/builtin_zeros.hpp"
#include "spnt/errors.hpp"

namespace spnt {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k)! for k = 1..30.
constexpr std::array<double, 30> kBernoulliOverFactorial = {
    0.083333333333333329,    -0.0013888888888888889,  3.3068783068783071e-05,
    -8.2671957671957675e-07, 2.08767569878681e-08,    -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225827e-13, 8.5860620562778452e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812522e-19,
    3.5347070396294673e-21,  -8.9535174270375463e-23, 2.2679524523376829e-24,
    -5.7447906688722025e-26, 1.455172475614865e-27,   -3.6859949406653103e-29,
    9.3367342570950451e-31,  -2.36502241570063e-32,   5.9906717624821341e-34,
    -1.5174548844682903e-35, 3.8437581254541886e-37,  -9.7363530726466913e-39,
    2.4662470442006811e-40,  -6.2470767418207434e-42, 1.5824030244644914e-43,
    -4.0082736859489357e-45, 1.0153075855569557e-46,  -2.5718041582418717e-48};

// B_{2k} / (2k (2k - 1)) for the Stirling series, k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,        -1.0 / 360.0,        1.0 / 1260.0,      -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0,   1.0 / 156.0,       -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

// sin(pi z) with the real part reduced exactly modulo 2 first.
Complex sin_pi(Complex z) {
  const double x = z.real() - 2.0 * std::round(z.real() / 2.0);
  const double y = kPi * z.imag();
  return {std::sin(kPi * x) * std::cosh(y), std::cos(kPi * x) * std::sinh(y)};
}

Complex lanczos_gamma(Complex z) {
  const Complex x = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (x + static_cast<double>(i));
  const Complex t = x + kLanczosG + 0.5;
  const Complex log_value = 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t;
  return std::exp(log_value) * series;
}

struct EmResult {
  Complex value;
  Complex deriv;
  double value_error = 0.0;
  double deriv_error = 0.0;
};

// Euler-Maclaurin for zeta and (optionally) zeta'. Only called with Im s >= 0.
EmResult euler_maclaurin(Complex s, int terms, bool with_derivative) {
  const double n_last = static_cast<double>(terms);
  Complex sum = 0.0;
  Complex dsum = 0.0;
  for (int n = 1; n < terms; ++n) {
    const double log_n = std::log(static_cast<double>(n));
    const Complex p = std::exp(-s * log_n);
    sum += p;
    if (with_derivative) dsum -= log_n * p;
  }

  const double log_N = std::log(n_last);
  const Complex N_pow = std::exp(-s * log_N);  // N^{-s}
  const Complex integral = N_pow * n_last / (s - 1.0);
  sum += integral + 0.5 * N_pow;
  if (with_derivative) dsum += -log_N * integral - integral / (s - 1.0) - 0.5 * log_N * N_pow;

  // T_k = c_k P_k(s) N^{-s-2k+1}, P_k(s) = s (s+1) ... (s+2k-2)
  Complex poly = s;
  Complex dpoly = 1.0;
  Complex power = N_pow / n_last;
  const double inv_N2 = 1.0 / (n_last * n_last);
  double last = std::numeric_limits<double>::infinity();
  double dlast = std::numeric_limits<double>::infinity();
  double remainder = 0.0;
  double dremainder = 0.0;
  bool converged = false;
  for (std::size_t k = 1; k <= kBernoulliOverFactorial.size(); ++k) {
    const double c = kBernoulliOverFactorial[k - 1];
    const Complex term = c * poly * power;
    const Complex dterm = c * (dpoly - log_N * poly) * power;
    const double mag = std::abs(term);
    const double dmag = std::abs(dterm);
    if (mag > last) {
      // asymptotic series started to diverge; the previous term bounds the error
      remainder = last;
      dremainder = dlast;
      converged = true;
      break;
    }
    sum += term;
    if (with_derivative) dsum += dterm;
    const double two_k = 2.0 * static_cast<double>(k);
    const double factor = std::abs(s + two_k + 1.0) / std::max(s.real() + two_k + 1.0, 1.0);
    if (mag <= 1e-17 * std::abs(sum) && (!with_derivative || dmag <= 1e-17 * std::abs(dsum))) {
      remainder = mag * factor;
      dremainder = dmag * factor;
      converged = true;
      break;
    }
    last = mag;
    dlast = dmag;
    remainder = mag * factor;
    dremainder = dmag * factor;
    const Complex q = (s + two_k - 1.0) * (s + two_k);
    const Complex dq = 2.0 * s + 2.0 * two_k - 1.0;
    dpoly = dpoly * q + poly * dq;
    poly *= q;
    power *= inv_N2;
  }
  (void)converged;

  const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(terms);
  EmResult out;
  out.value = sum;
  out.deriv = dsum;
  out.value_error = remainder + rounding * std::max(1.0, std::abs(sum));
  out.deriv_error = dremainder + rounding * log_N * std::max(1.0, std::abs(dsum));
  return out;
}

void check_zeta_argument(Complex s) {
  if (std::abs(s - 1.0) <= 1e-12) throw PoleError("zeta: pole at s = 1");
}

}  // namespace

Complex gamma_complex(Complex z) {
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - nearest) <= 1e-12) {
    throw PoleError("gamma: argument within 1e-12 of the pole at " + std::to_string(nearest));
  }
  if (z.imag() < 0.0) return std::conj(gamma_complex(std::conj(z)));
  if (z.real() < 0.5) return kPi / (sin_pi(z) * lanczos_gamma(1.0 - z));
  return lanczos_gamma(z);
}

Complex log_gamma(Complex z) {
  if (z.real() <= 0.0) throw DomainError("log_gamma: requires Re z > 0");
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  Complex shift = 0.0;
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

int zeta_default_terms(Complex s) {
  return static_cast<int>(std::ceil(std::abs(s) / kPi)) + 10;
}

Estimate zeta_em_estimate(Complex s, int terms) {
  check_zeta_argument(s);
  if (terms < 1) throw DomainError("zeta_em: terms must be positive");
  if (s.imag() < 0.0) {
    const Estimate e = zeta_em_estimate(std::conj(s), terms);
    return {std::conj(e.value), e.abs_error};
  }
  const EmResult r = euler_maclaurin(s, terms, false);
  if (r.value_error > 1e-12 * std::max(1.0, std::abs(r.value))) {
    throw AccuracyError("zeta_em: remainder estimate " + std::to_string(r.value_error) +
                        " too large for " + std::to_string(terms) + " terms");
  }
  return {r.value, r.value_error};
}

Complex zeta_em(Complex s, int terms) { return zeta_em_estimate(s, terms).value; }

Complex zeta(Complex s) { return zeta_em(s, zeta_default_terms(s)); }

Estimate zeta_derivative(Complex s) {
  check_zeta_argument(s);
  if (s.imag() < 0.0) {
    const Estimate e = zeta_derivative(std::conj(s));
    return {std::conj(e.value), e.abs_error};
  }
  const EmResult r = euler_maclaurin(s, zeta_default_terms(s), true);
  return {r.deriv, r.deriv_error};
}

Estimate zeta_logderiv_estimate(Complex s) {
  if (std::abs(s - 1.0) <= 1e-6) throw NearSingular("zeta_logderiv: within 1e-6 of the pole at s = 1");
  for (double gamma : builtin_zero_ordinates()) {
    if (std::abs(s - Complex(0.5, gamma)) <= 1e-6 || std::abs(s - Complex(0.5, -gamma)) <= 1e-6) {
      throw NearSingular("zeta_logderiv: within 1e-6 of the zero 1/2 + i" + std::to_string(gamma));
    }
  }
  if (s.imag() < 0.0) {
    const Estimate e = zeta_logderiv_estimate(std::conj(s));
    return {std::conj(e.value), e.abs_error};
  }
  const EmResult r = euler_maclaurin(s, zeta_default_terms(s), true);
  const Complex value = r.deriv / r.value;
  const double rel = r.value_error / std::abs(r.value) + r.deriv_error / std::abs(r.deriv);
  return {value, std::abs(value) * rel};
}

Complex zeta_logderiv(Complex s) { return zeta_logderiv_estimate(s).value; }

double riemann_siegel_theta(double t) {
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

Complex hardy_Z_complex(double t) {
  const Complex phase = std::polar(1.0, riemann_siegel_theta(t));
  return phase * zeta(Complex(0.5, t));
}

double hardy_Z(double t) {
  if (t < 0.0) throw DomainError("hardy_Z: requires t >= 0");
  if (t > kMaxZetaHeight) throw AccuracyError("hardy_Z: height above the supported 1000");
  return hardy_Z_complex(t).real();
}

}  // namespace spnt
