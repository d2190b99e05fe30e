#include "partkit/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace partkit {

long long FactorMap::value() const {
  long long v = 1;
  for (auto [p, e] : entries)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

FactorMap factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  FactorMap f;
  for (long long d : {2LL, 3LL}) {
    while (n % d == 0) {
      ++f.entries[d];
      n /= d;
    }
  }
  // remaining candidates are coprime to 6: 5, 7, 11, 13, ...
  for (long long d = 5, step = 2; d * d <= n; d += step, step = 6 - step) {
    while (n % d == 0) {
      ++f.entries[d];
      n /= d;
    }
  }
  if (n > 1) ++f.entries[n];
  return f;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (long long d = 5, step = 2; d * d <= n; d += step, step = 6 - step)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> divisors(long long n) {
  FactorMap f = factorize(n);
  std::vector<long long> ds{1};
  for (auto [p, e] : f.entries) {
    size_t base = ds.size();
    long long pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Integer jordan_totient(int m, long long n) {
  if (m < 1) throw std::invalid_argument("jordan_totient: order must be >= 1");
  FactorMap f = factorize(n);  // rejects n < 1
  Integer r = 1;
  for (auto [p, e] : f.entries) {
    Integer pm = ipow(p, static_cast<unsigned long long>(m));
    r *= pm - 1;
    for (int i = 1; i < e; ++i) r *= pm;
  }
  return r;
}

Integer euler_phi(long long n) { return jordan_totient(1, n); }

Integer dedekind_psi(long long n) {
  FactorMap f = factorize(n);
  Integer r = 1;
  for (auto [p, e] : f.entries) {
    r *= p + 1;
    for (int i = 1; i < e; ++i) r *= p;
  }
  return r;
}

int mobius(long long n) {
  FactorMap f = factorize(n);
  int sign = 1;
  for (auto [p, e] : f.entries) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long long divisor_count_floor(long long n) {
  if (n < 1) throw std::invalid_argument("divisor_count_floor: n must be >= 1");
  long long s = 0;
  for (long long k = 1; k <= n; ++k) s += (k * (n / k)) / n;
  return s;
}

Integer nearest_int(const Rational& x) {
  Integer num = numerator(x);
  Integer den = denominator(x);  // > 0, lowest terms
  Integer q = num / den;         // truncates toward zero
  if (num % den != 0 && num < 0) --q;  // floor
  Integer twice_rem = 2 * (num - q * den);
  if (twice_rem == den)
    throw std::domain_error("nearest_int: no nearest integer for exact half");
  return twice_rem < den ? q : q + 1;
}

}  // namespace partkit
