#pragma once

#include <string>

#include "partkit/types.hpp"

namespace partkit {

/* Exponent pair for the generalized smallest-parts function
 *
 *   spt_{(a,b)}(n) = sum over partitions of n of sigma(lambda)^a * #(lambda)^b
 *
 * where sigma is the smallest part and # its multiplicity.  (0,1) is the
 * classical spt; (0,0) collapses to the partition count. */
struct SptParams {
  long long a = 0;
  long long b = 0;
};

/* spt_{(a,b)} restricted to partitions into exactly k parts, by the
 * closed formula
 *
 *   floor(n/k)^a floor(k floor(n/k) / n) (k^b - (k-1)^b)
 *   + sum_{m=1}^{floor(n/k)} m^a sum_{v=1}^{k-1} (k-v)^b p(n - k m, v).
 *
 * k = 1 is the single partition {n}, worth n^a.  Conventions follow the
 * partition count: value 0 out of range, spt_nk(params, 0, 1) = 1. */
Integer spt_nk(const SptParams& params, long long n, long long k);

// spt_{(a,b)}(n) = sum_{k=1}^{n} spt_nk.  Rejects n < 1.
Integer spt_total(const SptParams& params, long long n);

/* The specialized displays, each implemented on its own rather than by
 * delegating to spt_nk:
 *   Spt10  (1,0): sum of smallest parts
 *   SptA0  (a,0): a-th powers of smallest parts (takes `extra` = a)
 *   Spt01  (0,1): smallest-part multiplicities, the classical spt
 *   Spt0B  (0,b): b-th powers of multiplicities (takes `extra` = b)
 *   Spt11  (1,1): smallest part times multiplicity */
enum class SptForm { Spt10, SptA0, Spt01, Spt0B, Spt11 };

SptForm spt_form_from_string(const std::string& name);

Integer spt_special(SptForm form, long long n, long long k,
                    long long extra = 0);

/* Witness for p(n,k) <= spt_{(a,b)}(n,k): both values plus the verdicts. */
struct InequalityWitness {
  Integer partition_count;
  Integer spt_value;
  bool holds = false;  // partition_count <= spt_value
  bool equal = false;
};

InequalityWitness check_inequality(const SptParams& params, long long n,
                                   long long k);

}  // namespace partkit
