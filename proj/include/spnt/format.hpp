#pragma once

#include <string>

namespace spnt {

/// Shortest decimal that round-trips to the same binary64 value.
std::string format_double(double v);

}  // namespace spnt
