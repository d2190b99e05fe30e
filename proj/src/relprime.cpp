#include "partkit/relprime.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "partkit/numtheory.hpp"
#include "partkit/partition_fn.hpp"

namespace partkit {

Integer lambda_divisible(long long m, long long n, long long k) {
  if (m < 1) throw std::invalid_argument("lambda_divisible: m must be >= 1");
  if (n < 0) return 0;
  if (n % m != 0) return 0;
  return p_recursive(n / m, k);
}

DivisorChain DivisorChain::make(std::vector<long long> members, long long n) {
  DivisorChain c;
  c.lcm = 1;
  long long prev = 1;
  for (long long m : members) {
    if (m <= prev) throw std::invalid_argument(
        "DivisorChain: members must be strictly increasing and > 1");
    if (n % m != 0)
      throw std::invalid_argument("DivisorChain: member does not divide n");
    c.lcm = std::lcm(c.lcm, m);
    prev = m;
  }
  c.members = std::move(members);
  return c;
}

namespace {

struct WalkCtx {
  const std::vector<long long>* dv;   // divisors of n that are <= bound; dv[0] = 1
  const std::vector<int>* lcm_idx;    // flattened m*m table, -1 when lcm > bound
  std::vector<long long>* net;        // signed chain count per lcm index
  int m = 0;
  unsigned long long nodes = 0;
  unsigned long long node_budget = 0;
};

/* Depth-first over strictly increasing divisor chains.  `cur` indexes the
 * lcm so far; extending by divisor j moves to lcm_idx[cur*m + j], and a
 * branch dies as soon as the lcm leaves the bound (it only grows). */
void walk_chains(WalkCtx& ctx, int j0, int cur, long long sign) {
  const auto& tab = *ctx.lcm_idx;
  for (int j = j0; j < ctx.m; ++j) {
    int ni = tab[static_cast<size_t>(cur) * static_cast<size_t>(ctx.m) +
                 static_cast<size_t>(j)];
    if (ni < 0) continue;  // lcm would exceed the bound; prune this branch
    if (++ctx.nodes > ctx.node_budget)
      throw std::runtime_error(
          "lambda_inclexcl: node budget " + std::to_string(ctx.node_budget) +
          " exceeded; raise the budget to proceed");
    (*ctx.net)[static_cast<size_t>(ni)] += sign;
    walk_chains(ctx, j + 1, ni, -sign);
  }
}

}  // namespace

Integer lambda_inclexcl(long long n, long long k, const InclExclLimits& limits) {
  if (n <= 1 || k < 1 || k > n) return 0;
  if (k == 1) return 1;  // every one-part partition {n}, n > 1, has gcd n

  long long bound = n / k;
  if (bound < 2) return 0;  // no divisor > 1 fits

  // divisors of n up to the bound; index 0 is the empty-chain lcm 1
  std::vector<long long> dv;
  for (long long d : divisors(n))
    if (d <= bound) dv.push_back(d);
  int m = static_cast<int>(dv.size());
  if (m <= 1) return 0;

  /* lcm closure table over the kept divisors.  Any lcm of divisors of n
   * divides n, so an in-bound lcm is itself in dv; out-of-bound entries
   * become -1 and terminate the branch. */
  std::vector<int> lcm_idx(static_cast<size_t>(m) * static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      long long l = std::lcm(dv[static_cast<size_t>(i)], dv[static_cast<size_t>(j)]);
      if (l > bound) continue;
      auto it = std::lower_bound(dv.begin(), dv.end(), l);
      lcm_idx[static_cast<size_t>(i) * static_cast<size_t>(m) +
              static_cast<size_t>(j)] =
          static_cast<int>(it - dv.begin());
    }

  /* Chains sharing an lcm contribute the same p(n/lcm, k), so the walk
   * tallies signed chain counts per lcm and the weighted sum happens
   * once per divisor afterwards. */
  std::vector<long long> net(static_cast<size_t>(m), 0);
  WalkCtx ctx;
  ctx.dv = &dv;
  ctx.lcm_idx = &lcm_idx;
  ctx.net = &net;
  ctx.m = m;
  ctx.node_budget = limits.node_budget;
  walk_chains(ctx, 1, 0, 1);

  Integer acc = 0;
  for (int i = 1; i < m; ++i)
    if (net[static_cast<size_t>(i)] != 0)
      acc += Integer(net[static_cast<size_t>(i)]) *
             p_recursive(n / dv[static_cast<size_t>(i)], k);
  return acc;
}

Integer lambda_mobius(long long n, long long k) {
  if (n < 1) throw std::invalid_argument("lambda_mobius: n must be >= 1");
  Integer acc = p_recursive(n, k);
  for (long long d : divisors(n)) {
    int mu = mobius(d);
    if (mu != 0) acc -= mu * p_recursive(n / d, k);
  }
  return acc;
}

Integer lambda_total(long long n) {
  if (n < 1) throw std::invalid_argument("lambda_total: n must be >= 1");
  return p_total(n) - p_psi_total(n);
}

Integer p_psi(long long n, long long k) {
  if (n == 0) return k == 1 ? 1 : 0;
  if (n < 0 || k < 1 || k > n) return 0;
  Integer acc = 0;
  for (long long d : divisors(n)) {
    int mu = mobius(d);
    if (mu != 0) acc += mu * p_recursive(n / d, k);
  }
  return acc;
}

Integer p_psi_total(long long n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  Integer acc = 0;
  for (long long d : divisors(n)) {
    int mu = mobius(d);
    if (mu != 0) acc += mu * p_total(n / d);
  }
  return acc;
}

}  // namespace partkit
