#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "partkit/enumerate.hpp"
#include "partkit/numtheory.hpp"
#include "partkit/partition_fn.hpp"
#include "partkit/relprime.hpp"

using namespace partkit;

TEST_CASE("divisible-part counts scale down") {
  CHECK(lambda_divisible(84, 420, 2) == 2);  // p(5, 2)
  CHECK(lambda_divisible(2, 420, 84) == p_recursive(210, 84));
  CHECK(lambda_divisible(7, 30, 2) == 0);   // 7 does not divide 30
  CHECK(lambda_divisible(2, 4, 2) == 1);    // {2,2}
  CHECK(lambda_divisible(1, 30, 2) == p_recursive(30, 2));
  CHECK(lambda_divisible(5, 0, 1) == 1);    // the empty partition
  CHECK_THROWS_AS(lambda_divisible(0, 30, 2), std::invalid_argument);
  CHECK_THROWS_AS(lambda_divisible(-2, 30, 2), std::invalid_argument);

  // against enumeration: count partitions with every part divisible by m
  for (long long n = 1; n <= 25; ++n) {
    for (long long k = 1; k <= n; ++k) {
      for (long long m = 1; m <= 4; ++m) {
        long long direct = 0;
        for (const Partition& p : partitions(n, k)) {
          bool all = true;
          for (long long part : p.parts)
            if (part % m != 0) all = false;
          if (all) ++direct;
        }
        CHECK(lambda_divisible(m, n, k) == direct);
      }
    }
  }
}

TEST_CASE("divisor chains validate their invariants") {
  auto c = DivisorChain::make({2, 3}, 12);
  CHECK(c.lcm == 6);
  auto single = DivisorChain::make({4}, 12);
  CHECK(single.lcm == 4);
  CHECK_THROWS_AS(DivisorChain::make({5}, 12), std::invalid_argument);
  CHECK_THROWS_AS(DivisorChain::make({3, 2}, 12), std::invalid_argument);
  CHECK_THROWS_AS(DivisorChain::make({2, 2}, 12), std::invalid_argument);
  CHECK_THROWS_AS(DivisorChain::make({1, 2}, 12), std::invalid_argument);
}

TEST_CASE("non-coprime counts, pinned values") {
  CHECK(lambda_inclexcl(30, 2) == 11);
  CHECK(lambda_mobius(30, 2) == 11);
  CHECK(lambda_inclexcl(12, 3) == 4);
  CHECK(lambda_mobius(12, 3) == 4);
  CHECK(lambda_inclexcl(4, 2) == 1);
  CHECK(lambda_inclexcl(7, 2) == 0);
  CHECK(lambda_inclexcl(84, 2) > 0);
}

TEST_CASE("non-coprime boundary conventions") {
  CHECK(lambda_inclexcl(0, 5) == 0);
  CHECK(lambda_inclexcl(1, 1) == 0);
  CHECK(lambda_inclexcl(1, 3) == 0);
  CHECK(lambda_inclexcl(5, 1) == 1);
  CHECK(lambda_inclexcl(2, 1) == 1);
  CHECK(lambda_inclexcl(5, 6) == 0);
  CHECK(lambda_mobius(1, 1) == 0);
  CHECK(lambda_mobius(5, 1) == 1);
  CHECK_THROWS_AS(lambda_mobius(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_mobius(-4, 2), std::invalid_argument);
}

TEST_CASE("both routes and enumeration agree") {
  for (long long n = 1; n <= 40; ++n) {
    for (long long k = 1; k <= n; ++k) {
      Integer ie = lambda_inclexcl(n, k);
      CHECK(ie == lambda_mobius(n, k));
      CHECK(ie == brute_lambda(n, k));
    }
  }
  for (long long n = 1; n <= 400; ++n)
    for (long long k = 2; k <= 3; ++k)
      CHECK(lambda_inclexcl(n, k) == lambda_mobius(n, k));
}

TEST_CASE("chain walk equals the unpruned subset expansion") {
  // exhaustively expand all subsets of the divisors > 1, filtering on
  // lcm <= n/k by hand, and compare against the pruned walk
  for (long long n = 2; n <= 60; ++n) {
    auto dv = divisors(n);
    std::vector<long long> big(dv.begin() + 1, dv.end());  // drop 1
    for (long long k = 1; k <= n; ++k) {
      Integer expanded = 0;
      for (unsigned mask = 1; mask < (1u << big.size()); ++mask) {
        long long l = 1;
        int bits = 0;
        for (size_t i = 0; i < big.size(); ++i) {
          if (mask & (1u << i)) {
            l = std::lcm(l, big[i]);
            ++bits;
          }
        }
        if (l > n / k) continue;
        Integer term = p_recursive(n / l, k);
        expanded += (bits % 2 == 1) ? term : -term;
      }
      CHECK(lambda_inclexcl(n, k) == expanded);
    }
  }
}

TEST_CASE("primes admit no non-coprime partition beyond the trivial one") {
  for (long long p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    CHECK(lambda_inclexcl(p, 1) == 1);  // {p} itself
    for (long long k = 2; k <= p; ++k) {
      CHECK(lambda_inclexcl(p, k) == 0);
      CHECK(p_psi(p, k) == p_recursive(p, k));
    }
  }
}

TEST_CASE("node budget refuses pathological walks") {
  InclExclLimits tight{.node_budget = 10};
  CHECK_THROWS_WITH_AS(lambda_inclexcl(1260, 2, tight),
                       doctest::Contains("node budget"), std::runtime_error);
}

TEST_CASE("relatively prime counts") {
  CHECK(p_psi(30, 2) == 4);
  CHECK(p_psi(0, 1) == 1);
  CHECK(p_psi(0, 2) == 0);
  CHECK(p_psi(1, 1) == 1);
  CHECK(p_psi(6, 3) == 2);

  for (long long n = 1; n <= 40; ++n) {
    for (long long k = 1; k <= n; ++k) {
      Integer psi = p_psi(n, k);
      CHECK(psi == brute_ppsi(n, k));
      CHECK(psi + lambda_mobius(n, k) == p_recursive(n, k));
    }
  }
}

TEST_CASE("totals split the partition count") {
  for (long long n = 1; n <= 60; ++n)
    CHECK(lambda_total(n) + p_psi_total(n) == p_total(n));
  CHECK(p_psi_total(0) == 1);
  CHECK(p_psi_total(5) == 6);
  CHECK(lambda_total(5) == 1);  // {5} is the only non-coprime partition of 5
}
