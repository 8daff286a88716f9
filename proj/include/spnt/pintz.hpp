#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spnt/lambda_sieve.hpp"
#include "spnt/smooth.hpp"
#include "spnt/specfun.hpp"
#include "spnt/zeros.hpp"

namespace spnt {

/// Center mu (on the log scale), Gaussian width k and reference zero rho0
/// for the smoothing integral U(mu).
struct PintzParams {
  double mu = 0.0;
  double k = 1.0;
  Complex rho0{0.5, 14.134725141734694};

  /// Throws DomainError unless k > 0, 0 < Re rho0 < 1 and Im rho0 > 0.
  void validate() const;
};

/// H(s) = s Gamma(s) (zeta'/zeta(s) + zeta(s)), the Mellin transform of Delta
/// against d/dx x^{-s}. Requires Re s > 1.
Complex mellin_H_closed(Complex s);

struct QuadratureValue {
  Complex value;
  double error = 0.0;       // discretization + head + tail estimates
  double head_bound = 0.0;  // omitted (0, u_min)
  double tail_bound = 0.0;  // omitted (upper, inf)
  double u_min = 0.0;
};

/// -s times the integral of Delta(u) u^{-s-1} over [u_min, upper], Simpson in
/// v = log u with a Richardson error estimate. u_min is chosen so the head is
/// below 1e-10. Requires Re s >= 2 and upper >= 1e3; throws ToleranceError
/// when the error estimate exceeds 1e-4.
QuadratureValue mellin_H_quadrature(const LambdaTable& table, Complex s, double upper = 1e3);
QuadratureValue mellin_H_quadrature(const DeltaFunction& delta_fn, Complex s, double upper = 1e3);

/// Trapezoid value of (1 / 2 pi i) times the integral of exp(kk s^2 + w s)
/// along Re s = 2, |Im s| <= height (first), and the closed form
/// exp(-w^2 / (4 kk)) / (2 sqrt(pi kk)) (second). Throws DomainError for
/// kk <= 0 and ToleranceError if the integrand at +-height exceeds 1e-14.
std::pair<Complex, Complex> gaussian_line_check(double kk, double w, double height);

/// The height at which the integrand has decayed well below 1e-14.
double gaussian_line_height(double kk, double w);

struct UIntegralOptions {
  double step = 0.05;  // trapezoid step in v = log u
};

struct UValue {
  Complex value;
  double error = 0.0;       // |T_h - T_2h| + head + tail
  double tail_bound = 0.0;
  double width = 0.0;       // integration ran over log u <= mu + width
  double u_max = 0.0;
};

/// U(mu) from its u-representation,
///   (1 / (2 sqrt(pi k))) int_0^inf Delta(u) u^{-1-rho0} exp(-(mu - log u)^2 / 4k)
///                                    (-rho0 + (mu - log u) / 2k) du,
/// with the trapezoid rule in v = log u. The upper width grows until the
/// Gaussian tail is below 1e-13 or the table stops; the lower end is
/// min(mu - width, log(1/40)). The reported error must be at most
/// tol |U| + 1e-12, else CapacityError (width capped by the table) or
/// ToleranceError.
UValue U_integral(const LambdaTable& table, const PintzParams& p, double tol,
                  const UIntegralOptions& options = {});
/// Hook form: Delta is evaluated only on (0, u_max].
UValue U_integral(const DeltaFunction& delta_fn, double u_max, const PintzParams& p, double tol,
                  const UIntegralOptions& options = {});

/// Bound on the omitted Gaussian tail of U beyond log u = mu + width,
/// assuming |Delta(u)| <= 2 there.
double U_tail_bound(const PintzParams& p, double width);

/// Table limit whose Delta reaches far enough for a tail below `target`.
std::uint64_t U_required_limit(const PintzParams& p, double target = 1e-13);

struct UResidueValue {
  Complex value;
  Complex pole_term;
  Complex zero_sum;
  double remainder_bound = 0.0;  // exp(-mu + 9k/4), attached, not computed
};

/// exp(k(1 - rho0)^2 + mu(1 - rho0)) + sum over stored zeros and their
/// conjugates of Gamma(rho) rho exp(k(rho - rho0)^2 + mu(rho - rho0)).
UResidueValue U_residue(const ZeroSet& zeros, const PintzParams& p);

struct TuranResult {
  double grid_max = 0.0;
  double argmax = 0.0;
  double bound = 0.0;
};

/// max over t in [a, a + b] of |sum_j exp(alpha_j t)| on 1e4 * refine grid
/// points plus golden-section refinement, against (b / (8 e (a + b)))^n.
/// Requires 1 <= n <= 32, a, b in (0, 100], refine >= 1, and
/// Re alpha_0 = 0 = max Re alpha_j within 1e-12 (NormalizationError).
TuranResult turan_bound(std::span<const Complex> alphas, double a, double b, int refine = 1);

struct TuranInstance {
  std::vector<Complex> alphas;
  double a = 1.0;
  double b = 1.0;
};

/// Seeded random instances: n uniform in [1, max_n], alpha_0 purely
/// imaginary, other Re alpha in [-1, 0], every Im alpha in [-10, 10],
/// a and b in [1, 10].
std::vector<TuranInstance> random_turan_instances(std::uint64_t seed, int count, int max_n = 8);

}  // namespace spnt
