#pragma once

#include <functional>

namespace spnt {

struct Minimum {
  double value = 0.0;
  double argmin = 0.0;
};

/// Golden-section search for a minimum of f on [a, b], stopping once the
/// bracket is narrower than `width`. Returns the best point evaluated.
Minimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                double width = 1e-12, int max_iterations = 200);

/// Minimum of f over [lo, hi]: f on `points` equally spaced nodes, then
/// golden-section refinement on the two intervals around the best node.
/// The grid pass guards against the flat or multimodal objectives the
/// metric minimizations produce.
Minimum grid_golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                             int points = 1024, double width = 1e-12);

}  // namespace spnt
