#include "spnt/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "spnt/errors.hpp"

namespace spnt {

Minimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                double width, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  Minimum best = fc <= fd ? Minimum{fc, c} : Minimum{fd, d};
  for (int it = 0; it < max_iterations && std::abs(b - a) > width; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.value) best = {fc, c};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.value) best = {fd, d};
    }
  }
  return best;
}

Minimum grid_golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                             int points, double width) {
  if (!(hi >= lo) || points < 2) throw DomainError("grid_golden_minimize: bad search interval");
  const double step = (hi - lo) / static_cast<double>(points - 1);
  Minimum best{f(lo), lo};
  int best_i = 0;
  for (int i = 1; i < points; ++i) {
    const double v = i == points - 1 ? hi : lo + step * static_cast<double>(i);
    const double fv = f(v);
    if (fv < best.value) {
      best = {fv, v};
      best_i = i;
    }
  }
  if (step == 0.0) return best;
  const double a = lo + step * static_cast<double>(std::max(best_i - 1, 0));
  const double b = std::min(hi, lo + step * static_cast<double>(std::min(best_i + 1, points - 1)));
  const Minimum refined = golden_section_minimize(f, a, b, width);
  return refined.value < best.value ? refined : best;
}

}  // namespace spnt
