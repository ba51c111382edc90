#include "superw/scalar.hpp"

#include <stdexcept>

namespace superw {

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar parse_scalar(const std::string& text) {
  Scalar value;
  if (text.empty() || value.set_str(text, 10) != 0 || value.get_den() == 0)
    throw std::invalid_argument("not a rational number: " + text);
  value.canonicalize();
  return value;
}

}  // namespace superw
