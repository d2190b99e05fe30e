#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partkit/enumerate.hpp"
#include "partkit/numtheory.hpp"
#include "partkit/partition_fn.hpp"
#include "partkit/spt.hpp"

using namespace partkit;

TEST_CASE("weighted counts, pinned values") {
  CHECK(spt_total({3, 2}, 5) == 173);
  CHECK(spt_total({0, 1}, 5) == 14);
  CHECK(spt_total({1, 1}, 2) == 4);
  CHECK(spt_total({0, 0}, 9) == 30);
  CHECK(spt_nk({0, 0}, 11, 3) == 10);
  CHECK(spt_nk({0, 1}, 5, 2) == 2);
  CHECK(spt_nk({2, 0}, 7, 1) == 49);
}

TEST_CASE("boundary conventions") {
  CHECK(spt_nk({0, 1}, 0, 1) == 1);
  CHECK(spt_nk({3, 2}, 0, 1) == 1);
  CHECK(spt_nk({0, 1}, 0, 2) == 0);
  CHECK(spt_nk({0, 1}, -3, 1) == 0);
  CHECK(spt_nk({0, 1}, 4, 9) == 0);
  CHECK(spt_nk({0, 1}, 4, 0) == 0);
  CHECK_THROWS_AS(spt_total({0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(spt_total({0, 1}, -5), std::invalid_argument);
  CHECK_THROWS_AS(spt_nk({-1, 0}, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(spt_nk({0, -1}, 5, 2), std::invalid_argument);
}

TEST_CASE("single-part column is a pure power") {
  for (long long a = 0; a <= 4; ++a)
    for (long long n = 1; n <= 50; ++n)
      CHECK(spt_nk({a, 0}, n, 1) ==
            ipow(n, static_cast<unsigned long long>(a)));
  // with b > 0 the multiplicity of the smallest part of {n} is 1
  CHECK(spt_nk({2, 3}, 6, 1) == 36);
}

TEST_CASE("exponent collapse to plain counting") {
  for (long long n = 1; n <= 30; ++n)
    for (long long k = 1; k <= n; ++k)
      CHECK(spt_nk({0, 0}, n, k) == p_recursive(n, k));
}

TEST_CASE("formula matches enumeration across the exponent grid") {
  for (long long a = 0; a <= 3; ++a) {
    for (long long b = 0; b <= 3; ++b) {
      SptParams params{a, b};
      for (long long n = 1; n <= 25; ++n) {
        CHECK(spt_total(params, n) == brute_spt(a, b, n));
        for (long long k = 1; k <= n; ++k)
          CHECK(spt_nk(params, n, k) == brute_spt_nk(a, b, n, k));
      }
    }
  }
}

TEST_CASE("specialized displays, pinned values") {
  CHECK(spt_special(SptForm::Spt01, 5, 2) == 2);
  CHECK(spt_special(SptForm::Spt10, 6, 3) == 4);
  CHECK(spt_special(SptForm::Spt11, 4, 2) == 5);
  CHECK(spt_special(SptForm::SptA0, 7, 1, 2) == 49);
  // partitions of 6 into 3 parts: multiplicities 2, 1, 3 -> 8 + 1 + 27
  CHECK(spt_special(SptForm::Spt0B, 6, 3, 3) == 36);
}

TEST_CASE("specialized displays agree with the general formula") {
  for (long long n = 1; n <= 20; ++n) {
    for (long long k = 1; k <= n; ++k) {
      CHECK(spt_special(SptForm::Spt10, n, k) == spt_nk({1, 0}, n, k));
      CHECK(spt_special(SptForm::Spt01, n, k) == spt_nk({0, 1}, n, k));
      CHECK(spt_special(SptForm::Spt11, n, k) == spt_nk({1, 1}, n, k));
      for (long long e = 0; e <= 3; ++e) {
        CHECK(spt_special(SptForm::SptA0, n, k, e) == spt_nk({e, 0}, n, k));
        CHECK(spt_special(SptForm::Spt0B, n, k, e) == spt_nk({0, e}, n, k));
      }
    }
  }
  CHECK(spt_form_from_string("spt10") == SptForm::Spt10);
  CHECK(spt_form_from_string("spta0") == SptForm::SptA0);
  CHECK(spt_form_from_string("spt01") == SptForm::Spt01);
  CHECK(spt_form_from_string("spt0b") == SptForm::Spt0B);
  CHECK(spt_form_from_string("spt11") == SptForm::Spt11);
  CHECK_THROWS_AS(spt_form_from_string("spt22"), std::invalid_argument);
}

TEST_CASE("classical spt minus the layered sum counts divisors") {
  // spt(n) - sum_{k,m,v} (k-v) p(n-km, v) = d(n)
  for (long long n = 1; n <= 40; ++n) {
    Integer layered = 0;
    for (long long k = 1; k <= n; ++k)
      for (long long m = 1; m <= n / k; ++m)
        for (long long v = 1; v <= k - 1; ++v)
          layered += Integer(k - v) * p_recursive(n - k * m, v);
    CHECK(spt_total({0, 1}, n) - layered ==
          static_cast<long long>(divisors(n).size()));
  }
}

TEST_CASE("weighted count dominates the plain count") {
  for (long long n = 1; n <= 20; ++n) {
    for (long long k = 1; k <= n; ++k) {
      for (long long a = 0; a <= 2; ++a) {
        for (long long b = 0; b <= 2; ++b) {
          auto w = check_inequality({a, b}, n, k);
          CHECK(w.partition_count == p_recursive(n, k));
          CHECK(w.spt_value == spt_nk({a, b}, n, k));
          CHECK(w.holds);
          CHECK(w.equal == (w.partition_count == w.spt_value));
        }
      }
    }
  }

  auto eq = check_inequality({0, 0}, 9, 3);
  CHECK(eq.holds);
  CHECK(eq.equal);
  auto strict = check_inequality({1, 1}, 9, 3);
  CHECK(strict.holds);
  CHECK_FALSE(strict.equal);
}

TEST_CASE("totals equal the count exactly in the degenerate cases") {
  // sum_k spt_{(a,b)}(n,k) = p(n) only when a = b = 0 or n = 1
  for (long long n = 1; n <= 25; ++n) {
    for (long long a = 0; a <= 2; ++a) {
      for (long long b = 0; b <= 2; ++b) {
        bool equal = spt_total({a, b}, n) == p_total(n);
        CHECK(equal == ((a == 0 && b == 0) || n == 1));
      }
    }
  }
}
