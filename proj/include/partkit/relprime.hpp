#pragma once

#include <vector>

#include "partkit/types.hpp"

namespace partkit {

/* Lambda(n,k): partitions of n into k parts whose gcd exceeds 1;
 * p_psi(n,k): the relatively prime remainder, p(n,k) - Lambda(n,k). */

/* Lambda_m(n,k): partitions of n into k parts all divisible by m.
 * Scaling by m gives p(n/m, k) when m | n and nothing otherwise.
 * Rejects m < 1. */
Integer lambda_divisible(long long m, long long n, long long k);

/* A strictly increasing set of divisors of n, each > 1, together with
 * its least common multiple.  The inclusion-exclusion walk sums
 * (-1)^(size+1) p(n/lcm, k) over every chain with lcm <= n/k. */
struct DivisorChain {
  std::vector<long long> members;
  long long lcm = 1;

  // Throws unless members are strictly increasing divisors of n, all > 1,
  // and lcm matches.
  static DivisorChain make(std::vector<long long> members, long long n);
};

/* The subset walk can touch 2^(d(n)-1) chains before pruning; a node
 * budget turns a pathological input into an error instead of a hang. */
struct InclExclLimits {
  unsigned long long node_budget = 6'000'000'000ULL;
};

/* Lambda(n,k) by inclusion-exclusion over divisor chains: depth-first in
 * increasing-divisor order, pruning a branch as soon as its lcm exceeds
 * n/k (the lcm only grows along a chain).  Lambda(0,k) and Lambda(1,k)
 * are 0; Lambda(n,1) = 1 for n > 1. */
Integer lambda_inclexcl(long long n, long long k,
                        const InclExclLimits& limits = {});

/* Lambda(n,k) = p(n,k) - sum_{d | n} mu(d) p(n/d, k).  The default fast
 * path.  Rejects n < 1. */
Integer lambda_mobius(long long n, long long k);

// Lambda(n) summed over k, via the Moebius route.
Integer lambda_total(long long n);

/* p_psi(n,k) = sum_{d | n} mu(d) p(n/d, k), i.e. p(n,k) - Lambda(n,k),
 * with p_psi(0,1) = 1. */
Integer p_psi(long long n, long long k);

// p_psi(n) over all k; p_psi(0) = 1.
Integer p_psi_total(long long n);

}  // namespace partkit
