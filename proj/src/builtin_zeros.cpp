#include "spnt/builtin_zeros.hpp"

#include <array>

namespace spnt {
namespace {
#include "builtin_zeros_table.inc"
}  // namespace

std::span<const double> builtin_zero_ordinates() { return kBuiltinOrdinates; }

double builtin_zero_height() { return kBuiltinHeight; }

}  // namespace spnt
