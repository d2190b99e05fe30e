#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partkit/types.hpp"

namespace partkit {

/* An identity between an arithmetic function and a partition-count
 * expression, valid from `window_min` on.  Below the window some n
 * genuinely disagree; those are pinned in known_exceptions and treated
 * as informational, never as failures.
 *
 * Evaluators return nullopt when a side is undefined (e.g. a zero
 * denominator below the window). */
struct IdentityCheck {
  std::string id;
  std::string description;
  long long window_min = 1;
  std::vector<long long> known_exceptions;
  std::function<std::optional<Rational>(long long)> lhs;
  std::function<std::optional<Rational>(long long)> rhs;
};

// The full registry, in a fixed order.
const std::vector<IdentityCheck>& identity_registry();

// Lookup by id; nullptr when absent.
const IdentityCheck* find_identity(const std::string& id);

struct IdentityMismatch {
  long long n = 0;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
};

struct VerificationReport {
  std::string id;
  long long n_lo = 0;
  long long n_hi = 0;
  std::vector<IdentityMismatch> failures;       // in-window disagreements
  std::vector<IdentityMismatch> informational;  // below-window disagreements
  std::chrono::duration<double> elapsed{};

  bool ok() const { return failures.empty(); }
};

/* Check one identity over n in [n_lo, n_hi].  Disagreements below the
 * window land in `informational`; disagreements at or above it are
 * failures.  Throws std::invalid_argument for an unknown id. */
VerificationReport verify_identity(const std::string& id, long long n_lo,
                                   long long n_hi);

}  // namespace partkit
