#pragma once

// Exact rational scalar type and formatting helpers. Arbitrary-precision
// backing keeps LP pivots and cleared-denominator color counts exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>
#include <vector>

#include "ich/util.hpp"

namespace ich {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline BigInt floor_rational(const Rational& r) {
  BigInt q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline BigInt ceil_rational(const Rational& r) {
  BigInt q = num(r) / den(r);
  if (num(r) > 0 && q * den(r) != num(r)) ++q;
  return q;
}

// lcm of the denominators of a list of rationals (1 for an empty list).
inline BigInt lcm_denominators(const std::vector<Rational>& rs) {
  BigInt l = 1;
  for (const Rational& r : rs) l = boost::multiprecision::lcm(l, den(r));
  return l;
}

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

// Fixed-point decimal rendering with round-half-up, computed in integer
// arithmetic so output is bit-identical across platforms.
inline std::string decimal_string(const Rational& r, int digits) {
  BigInt n = num(r), d = den(r);
  bool neg = n < 0;
  if (neg) n = -n;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = (n * scale * 2 + d) / (d * 2);  // round half up
  BigInt ip = scaled / scale, fp = scaled % scale;
  std::string out = (neg && scaled != 0 ? "-" : "") + ip.str();
  if (digits > 0) {
    std::string f = fp.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

inline long long to_long_checked(const BigInt& v, const char* what = "conversion") {
  if (v > BigInt(std::numeric_limits<long long>::max()) ||
      v < BigInt(std::numeric_limits<long long>::min()))
    throw error(std::string(what) + ": value does not fit in 64 bits");
  return static_cast<long long>(v);
}

}  // namespace ich
