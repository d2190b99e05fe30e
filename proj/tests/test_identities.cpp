#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "partkit/identities.hpp"
#include "partkit/numtheory.hpp"

using namespace partkit;

namespace {

// id -> (window_min, known exceptions), pinned
const std::map<std::string, std::pair<long long, std::set<long long>>>
    kExpected = {
        {"EB-PHI", {3, {1, 2}}},      {"EB-J2", {4, {1, 2, 3}}},
        {"HARDY-SUM", {1, {}}},       {"HARDY-PHI", {4, {1, 2, 3}}},
        {"HARDY-J2", {4, {1, 2, 3}}}, {"HONS-P3", {1, {}}},
        {"HONS-J2", {4, {1, 2, 3}}},  {"W-P2A", {1, {}}},
        {"W-P2B", {1, {}}},           {"W-P3", {1, {}}},
        {"W-PHI", {3, {1, 2}}},       {"W-J2", {4, {1, 2, 3}}},
        {"COMB-PHI", {3, {1, 2}}},    {"COMB-J2", {4, {1, 2, 3}}},
        {"PSI-A", {3, {1, 2}}},       {"PSI-B", {4, {1, 2, 3}}},
};

}  // namespace

TEST_CASE("registry carries the pinned windows and exceptions") {
  const auto& reg = identity_registry();
  REQUIRE(reg.size() == kExpected.size());
  std::set<std::string> seen;
  for (const auto& check : reg) {
    CHECK(seen.insert(check.id).second);
    auto it = kExpected.find(check.id);
    REQUIRE_MESSAGE(it != kExpected.end(), check.id);
    CHECK(check.window_min == it->second.first);
    CHECK(std::set<long long>(check.known_exceptions.begin(),
                              check.known_exceptions.end()) ==
          it->second.second);
    CHECK_FALSE(check.description.empty());
    CHECK(static_cast<bool>(check.lhs));
    CHECK(static_cast<bool>(check.rhs));
  }
}

TEST_CASE("lookup") {
  CHECK(find_identity("EB-PHI") != nullptr);
  CHECK(find_identity("nope") == nullptr);
  CHECK_THROWS_AS(verify_identity("nope", 1, 10), std::invalid_argument);
}

TEST_CASE("spot values") {
  const auto* ebphi = find_identity("EB-PHI");
  REQUIRE(ebphi != nullptr);
  CHECK(ebphi->lhs(30).value() == Rational(8));
  CHECK(ebphi->rhs(30).value() == Rational(8));
  CHECK(ebphi->lhs(2).value() == Rational(1));
  CHECK(ebphi->rhs(2).value() == Rational(2));

  const auto* hardy = find_identity("HARDY-SUM");
  REQUIRE(hardy != nullptr);
  CHECK(hardy->lhs(5).value() == Rational(5));
  CHECK(hardy->rhs(5).value() == Rational(5));

  const auto* ebj2 = find_identity("EB-J2");
  REQUIRE(ebj2 != nullptr);
  CHECK(ebj2->lhs(4).value() == Rational(12));
  CHECK(ebj2->rhs(4).value() == Rational(12));
  CHECK(ebj2->lhs(3) != ebj2->rhs(3));  // below the window

  // one side undefined below the window: a zero denominator
  const auto* psia = find_identity("PSI-A");
  REQUIRE(psia != nullptr);
  CHECK_FALSE(psia->rhs(1).has_value());
  CHECK(psia->lhs(1).has_value());
}

TEST_CASE("no in-window failures up to 500") {
  for (const auto& check : identity_registry()) {
    auto report = verify_identity(check.id, 1, 500);
    CHECK(report.id == check.id);
    CHECK_MESSAGE(report.ok(), check.id);
    CHECK_MESSAGE(report.failures.empty(), check.id);
    CHECK(report.elapsed.count() >= 0.0);

    // below-window mismatches are exactly the pinned exceptions
    std::set<long long> found;
    for (const auto& m : report.informational) found.insert(m.n);
    CHECK_MESSAGE(found == kExpected.at(check.id).second, check.id);
  }
}

TEST_CASE("every pinned exception is a genuine disagreement") {
  for (const auto& check : identity_registry()) {
    for (long long n : check.known_exceptions) {
      auto l = check.lhs(n);
      auto r = check.rhs(n);
      bool disagrees = !l.has_value() || !r.has_value() || *l != *r;
      CHECK_MESSAGE(disagrees, check.id << " at n = " << n);
    }
  }
}

TEST_CASE("rounded expressions are never ambiguous") {
  // the two half-integer rounders stay clear of exact halves
  for (long long n = 1; n <= 2000; ++n) {
    CHECK((Integer(n) * n) % 12 != 6);
    CHECK((Integer(n + 3) * (n + 3)) % 12 != 6);
  }
}

TEST_CASE("report bounds and clamping") {
  auto report = verify_identity("EB-PHI", 1, 30);
  CHECK(report.n_lo == 1);
  CHECK(report.n_hi == 30);
  CHECK(report.ok());
  REQUIRE(report.informational.size() == 2);
  CHECK(report.informational[0].n == 1);
  CHECK(report.informational[1].n == 2);

  auto clamped = verify_identity("EB-PHI", -10, 5);
  CHECK(clamped.n_lo == 1);

  auto empty = verify_identity("EB-PHI", 10, 5);
  CHECK(empty.ok());
  CHECK(empty.informational.empty());
}
