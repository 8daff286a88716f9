#pragma once

#include <span>

namespace spnt {

/// Ordinates of the first 100 nontrivial zeta zeros, ascending. Generated by
/// `spnt zeros --T 237` and stored in data/zeros_100.txt.
std::span<const double> builtin_zero_ordinates();

/// Every zero with 0 < gamma <= this height is in the builtin table.
double builtin_zero_height();

}  // namespace spnt
