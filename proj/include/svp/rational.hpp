#pragma once

#include <cstdint>
#include <string>

#include "svp/error.hpp"

namespace svp {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (den > 0, gcd(|num|, den) = 1). Arithmetic checks for overflow.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

/// Renders "p/q", or just "p" for integers.
std::string to_string(const Rat& r);

/// Parses "p", "-p", or "p/q".
Rat parse_rat(const std::string& s);

}  // namespace svp
