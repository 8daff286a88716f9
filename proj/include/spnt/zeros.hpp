#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace spnt {

/// A nontrivial zero beta + i gamma with gamma > 0. The conjugate zero is
/// implicit: every zero sum in this library runs over the stored zeros and
/// doubles the real part (or adds the conjugate explicitly when the summand
/// is not conjugate-symmetric).
struct Zero {
  double beta = 0.5;
  double gamma = 0.0;
};

/// Ordered list of zeros in the upper half-plane.
///
/// Invariants: 0 < beta < 1, gamma > 0 strictly ascending, and every beta is
/// exactly 1/2 when assume_rh() holds. height() is the completeness bound: all
/// zeros with 0 < gamma <= height are present.
class ZeroSet {
 public:
  ZeroSet() = default;
  /// Validates the invariants; throws OrderError or DomainError.
  ZeroSet(std::vector<Zero> zeros, double height);

  std::span<const Zero> zeros() const noexcept { return zeros_; }
  std::size_t size() const noexcept { return zeros_.size(); }
  bool empty() const noexcept { return zeros_.empty(); }
  bool assume_rh() const noexcept { return assume_rh_; }
  double height() const noexcept { return height_; }

  /// Zeros with gamma <= max_gamma, height capped accordingly.
  ZeroSet truncated(double max_gamma) const;

 private:
  std::vector<Zero> zeros_;
  bool assume_rh_ = true;
  double height_ = 0.0;
};

/// The bundled table of the first 100 zeros on the critical line.
ZeroSet builtin_zeros();

/// Parse the zero-table text format: one zero per line, either "gamma" or
/// "beta gamma"; '#' starts a comment line; a "# height T" comment sets the
/// completeness bound (default: the last gamma). Errors: ParseError (with the
/// line number), OrderError, EmptySetError.
ZeroSet parse_zeros(std::istream& in);
ZeroSet load_zeros(const std::filesystem::path& path);

/// Inverse of parse_zeros; shortest round-trip decimals.
void write_zeros(std::ostream& out, const ZeroSet& zeros);
void save_zeros(const std::filesystem::path& path, const ZeroSet& zeros);

/// Critical-line zeros with gamma <= T from sign changes of Hardy's Z on a
/// grid of step <= 0.05, each refined by bisection to 1e-12. Requires
/// 10 <= T <= 1000 (RangeError otherwise).
ZeroSet find_zeros(double T);

/// Main terms of the Riemann-von Mangoldt count, (T/2pi) log(T/(2 pi e)) + 7/8.
double riemann_von_mangoldt(double T);

enum class ExplicitConstant {
  Paper,    // -log 2pi, without the -1/2 from the baseline
  Derived,  // 1/2 - log 2pi, which includes the -1/2 from I(x) = x - 1/2 + O(1/x)
};

double explicit_constant(ExplicitConstant mode);

/// -sum_{stored zeros} 2 Re(Gamma(rho) x^rho) + C. Requires x >= 1.
/// Throws EmptySetError for an empty set.
double explicit_delta(double x, const ZeroSet& zeros, ExplicitConstant mode);

}  // namespace spnt
