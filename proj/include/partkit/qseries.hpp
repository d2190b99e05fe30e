#pragma once

#include <optional>
#include <vector>

#include "partkit/types.hpp"

namespace partkit {

/* Power series in q with exact integer coefficients, truncated at a
 * fixed order N (i.e. computed mod q^(N+1)).  Reading past the order is
 * an error, never an implicit zero: a truncated series does not know
 * those coefficients. */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long long order);

  static TruncatedSeries one(long long order);

  long long order() const { return static_cast<long long>(c_.size()) - 1; }

  const Integer& coeff(long long i) const;
  void set_coeff(long long i, Integer v);

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Integer> c_;  // c_[i] is the q^i coefficient, size order+1
};

// Sum and Cauchy product, truncated to the smaller of the two orders.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/* Multiplicative inverse mod q^(N+1).  Requires constant coefficient
 * 1 or -1 (the only units with integer inverses); rejects others. */
TruncatedSeries invert(const TruncatedSeries& f);

/* q-Pochhammer (q;q)_n = prod_{m=1}^{n} (1 - q^m), truncated at order N.
 * pochhammer_q(N, N) stands in for (q;q)_infinity: factors beyond q^N
 * cannot change coefficients up to N. */
TruncatedSeries pochhammer_q(long long n, long long order);

/* Coefficients of sum_n p(n) q^n = 1/(q;q)_inf through q^N; entry [n]
 * is p(n). */
std::vector<Integer> gf_p_coefficients(long long order);

/* Generating functions for the two classical spt variants:
 *   (a,b) = (0,1):  (1/(q;q)_inf) sum_{n>=1} q^n (q;q)_{n-1} / (1-q^n)
 *   (a,b) = (1,1):  same with an extra factor n on each term.
 * Entry [n] of the result is spt_{(a,b)}(n).  Other (a,b) are rejected. */
std::vector<Integer> gf_spt(long long a, long long b, long long order);

/* Probe of the conjectured generating function
 *
 *   sum_n spt_{(a,b)}(n) q^n  =?=
 *     (1/(q;q)_inf) sum_{n>=1} n^a (q^n (q;q)_{n-1} / (1-q^n))^b
 *
 * against the combinatorial values, through q^N.  The outcome is a
 * report: beyond the proven (0,1) and (1,1) cases agreement is an
 * observation, not a theorem, so nothing here asserts. */
struct ConjectureReport {
  long long a = 0;
  long long b = 0;
  long long order = 0;
  struct Row {
    long long n;
    Integer series_coeff;
    Integer spt_value;
    bool agree;
  };
  std::vector<Row> rows;  // n = 1..order
  bool all_agree = true;
  std::optional<long long> first_mismatch;
};

ConjectureReport conjecture_report(long long a, long long b, long long order);

}  // namespace partkit
