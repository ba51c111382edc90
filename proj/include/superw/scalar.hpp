#pragma once

#include <gmpxx.h>

#include <string>

namespace superw {

/// Exact rational coefficient. All structure constants and shifts in this
/// project are integers, so denominators only appear through the odd-square
/// rule x*x = 1/2 [x,x] in non-gl algebras.
using Scalar = mpq_class;

std::string to_string(const Scalar& value);

/// Parses "p" or "p/q".
Scalar parse_scalar(const std::string& text);

}  // namespace superw
