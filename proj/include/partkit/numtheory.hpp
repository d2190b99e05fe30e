#pragma once

#include <map>
#include <vector>

#include "partkit/types.hpp"

namespace partkit {

/* Prime factorization as an ordered prime -> exponent map.
 * Invariants: keys are prime and ascending, exponents >= 1, and the
 * product of p^e reconstructs the input.  factorize(1) is empty. */
struct FactorMap {
  std::map<long long, int> entries;

  long long value() const;
};

// Trial division; intended operating range n <= 10^9.  Rejects n < 1.
FactorMap factorize(long long n);

bool is_prime(long long n);

// All positive divisors of n in ascending order.  Rejects n < 1.
std::vector<long long> divisors(long long n);

/* Jordan totient J_m(n) = n^m * prod_{p | n} (1 - p^-m), evaluated
 * exactly as prod p^{m(e-1)} (p^m - 1) over the factorization.
 * Rejects m < 1 or n < 1. */
Integer jordan_totient(int m, long long n);

// Euler phi = J_1.
Integer euler_phi(long long n);

// Dedekind psi(n) = n * prod_{p | n} (1 + 1/p) = J_2(n) / J_1(n).
Integer dedekind_psi(long long n);

// Moebius mu(n); rejects n < 1.
int mobius(long long n);

/* sum_{k=1}^{n} floor(k * floor(n/k) / n).  Each term is 1 exactly when
 * k divides n, so the sum equals the divisor count d(n). */
long long divisor_count_floor(long long n);

/* Nearest integer <x>: the unique z with |x - z| < 1/2.
 * Exact halves have no nearest integer and raise std::domain_error. */
Integer nearest_int(const Rational& x);

// (-1)^n.
inline int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

// cos(2*pi*n/3) exactly: 1 when 3 | n, else -1/2.
inline Rational cos_two_pi_third(long long n) {
  long long r = n % 3;
  if (r < 0) r += 3;
  return r == 0 ? Rational(1) : Rational(-1, 2);
}

}  // namespace partkit
