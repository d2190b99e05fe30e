#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partkit {

/* All counting results use arbitrary-precision integers: spt sums with
 * exponents in the teens overflow 64-bit machine words long before the
 * enumeration ranges do.  Exact rationals back the identity checks and
 * the nearest-integer forms. */
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exp with ipow(0, 0) = 1.
inline Integer ipow(const Integer& base, unsigned long long exp) {
  Integer r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

inline Integer ipow(long long base, unsigned long long exp) {
  return ipow(Integer(base), exp);
}

}  // namespace partkit
