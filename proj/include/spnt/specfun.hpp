#pragma once

#include <complex>

namespace spnt {

/// Complex value used for every special-function argument and result.
using Complex = std::complex<double>;

/// A value together with an estimate of its absolute error.
struct Estimate {
  Complex value;
  double abs_error = 0.0;
};

/// Gamma function on the complex plane.
///
/// Lanczos approximation (g = 7, nine terms) on Re z >= 1/2, reflection
/// formula below that. Relative error is ~1e-13 for |z| <= 200.
/// Throws PoleError within 1e-12 of a non-positive integer.
Complex gamma_complex(Complex z);

/// Principal-branch continuation of log Gamma on Re z > 0 (Stirling series
/// after upward recurrence). The imaginary part is continuous in z, which is
/// what the Riemann-Siegel theta function needs.
Complex log_gamma(Complex z);

/// Euler-Maclaurin evaluation of zeta(s) using `terms` explicit summands.
/// Bernoulli corrections are added until they fall below rounding; if the
/// remainder estimate is still above 1e-12 relative the call throws
/// AccuracyError. Throws PoleError within 1e-12 of s = 1.
Complex zeta_em(Complex s, int terms);

/// Same with the remainder estimate reported.
Estimate zeta_em_estimate(Complex s, int terms);

/// zeta(s) with an automatically chosen number of summands.
Complex zeta(Complex s);

/// Number of explicit summands zeta() uses at s.
int zeta_default_terms(Complex s);

/// zeta'(s) from the term-by-term differentiated Euler-Maclaurin series.
Estimate zeta_derivative(Complex s);

/// zeta'(s) / zeta(s) with a propagated error estimate.
/// Throws NearSingular within 1e-6 of s = 1 or of a bundled zero.
Estimate zeta_logderiv_estimate(Complex s);
Complex zeta_logderiv(Complex s);

/// Riemann-Siegel theta: arg Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
double riemann_siegel_theta(double t);

/// e^{i theta(t)} zeta(1/2 + it); real up to rounding.
Complex hardy_Z_complex(double t);

/// Hardy's Z(t) for 0 <= t <= 1000. Throws AccuracyError above that height
/// and DomainError for negative t.
double hardy_Z(double t);

inline constexpr double kMaxZetaHeight = 1000.0;

}  // namespace spnt
