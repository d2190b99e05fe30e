#pragma once

#include <functional>
#include <span>
#include <string>

#include "partkit/types.hpp"

namespace partkit {

/* Specification of a nested sum
 *
 *   sum_{i_0 = outer_start}^{ub(0)} sum_{i_1 = inner_start}^{ub(1, i_0)}
 *     ... summand(i_0, ..., i_{depth-1})
 *
 * where each upper bound may depend on the indices assigned so far.  An
 * empty range at any level contributes 0; in particular an empty
 * outermost range makes the whole sum 0. */
struct MultiSumSpec {
  int depth = 0;                // number of indices, >= 1
  long long outer_start = 1;    // lower bound of index 0
  long long inner_start = 0;    // lower bound of the remaining indices
  // upper bound of index `pos`, given the values of indices 0..pos-1
  std::function<long long(int pos, std::span<const long long> assigned)>
      upper_bound;
  std::function<Integer(std::span<const long long> indices)> summand;
};

inline constexpr long long kMultiSumTermBudget = 100'000'000;

/* Exact value of the nested sum.  Rejects depth < 1; refuses to spend
 * more than `term_budget` summand evaluations. */
Integer eval_multisum(const MultiSumSpec& spec,
                      long long term_budget = kMultiSumTermBudget);

/* Count p(n,k) of partitions of n into exactly k parts, via the
 * recursion over the second-smallest part class:
 *
 *   p(n,k) = sum_{m=1}^{floor(n/k)} sum_{v=1}^{k-1} p(n - k m, v)
 *
 * with p(n,1) = 1 and the usual boundary conventions: p(0,1) = 1 and
 * p(n,k) = 0 whenever n < 0, k < 1, or k > n otherwise.  Memoized;
 * the table tolerates concurrent readers. */
Integer p_recursive(long long n, long long k);

/* Guards for the closed form.  The nested-sum depth is k-2, so the
 * term count grows quickly in k; k above max_k is refused with an
 * error naming the guard. */
struct ClosedFormLimits {
  long long max_k = 16;
  long long term_budget = kMultiSumTermBudget;
};

/* p(n,k) in closed form: p(n,1) = 1, p(n,2) = floor(n/2), and for
 * k >= 3 a depth-(k-2) nested sum over indices m_k..m_3 (m_k from 1,
 * the rest from 0, each bounded by the weight left at its level) of
 * floor((2 + n - sum_{j=3}^{k} j m_j) / 2). */
Integer p_closed(long long n, long long k, const ClosedFormLimits& limits = {});

enum class PStrategy { Recursive, Closed };

// p(n) = sum_k p(n,k), by either per-k strategy.  p(0) = 1.
Integer p_total(long long n, PStrategy strategy = PStrategy::Recursive,
                const ClosedFormLimits& limits = {});

/* p(n) by the pentagonal-number recurrence
 * p(n) = sum_{j>=1} (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)],
 * memoized.  Independent of the per-k formulas; used as an oracle. */
Integer p_pentagonal(long long n);

/* Closed expressions for k <= 3.  Forms:
 *   floor    k=1: 1    k=2: floor(n/2)
 *            k=3: sum_{m=1}^{floor(n/3)} floor((2+n-3m)/2)
 *   nearest  k=2: <(2n-1)/4>           k=3: <n^2/12>
 *   parity   k=2: (2n-1+(-1)^n)/4
 *   trig     k=3: (6n^2-7-9(-1)^n+16cos(2pi n/3))/72
 * Unknown form/k combinations are rejected. */
enum class SmallKForm { Floor, Nearest, Parity, Trig };

SmallKForm small_k_form_from_string(const std::string& name);

Integer p_small_k(long long n, long long k, SmallKForm form);

}  // namespace partkit
