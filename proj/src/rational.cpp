#include "svp/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace svp {

namespace {

std::int64_t checked(__int128 v, const char* op) {
  if (v > INT64_MAX || v < INT64_MIN) fail(Err::invalid_input, std::string("rational overflow in ") + op);
  return static_cast<std::int64_t>(v);
}

Rat make(__int128 n, __int128 d, const char* op) {
  if (d == 0) fail(Err::invalid_input, "rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  __int128 an = n < 0 ? -n : n;
  __int128 g = 1;
  {
    __int128 x = an, y = d;
    while (y != 0) { __int128 t = x % y; x = y; y = t; }
    g = x == 0 ? 1 : x;
  }
  Rat r;
  r.num = checked(n / g, op);
  r.den = checked(d / g, op);
  return r;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) { *this = make(n, d, "ctor"); }

Rat operator+(const Rat& a, const Rat& b) {
  return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
              static_cast<__int128>(a.den) * b.den, "+");
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den, "*");
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) fail(Err::singular_matrix, "rational division by zero");
  return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num, "/");
}

std::string to_string(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(Err::invalid_input, "bad rational literal '" + s + "'");
  }
}

}  // namespace svp
