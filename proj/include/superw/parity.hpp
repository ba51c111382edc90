#pragma once

#include <cstdint>

namespace superw {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) { return is_odd(a) && is_odd(b) ? -1 : 1; }

/// (-1)^{|a|}
constexpr int parity_sign(Parity a) { return is_odd(a) ? -1 : 1; }

}  // namespace superw
