#include "partkit/identities.hpp"

#include <stdexcept>

#include "partkit/numtheory.hpp"
#include "partkit/partition_fn.hpp"
#include "partkit/relprime.hpp"

namespace partkit {

namespace {

using OptR = std::optional<Rational>;

Rational phi(long long n) { return Rational(euler_phi(n)); }
Rational j2(long long n) { return Rational(jordan_totient(2, n)); }
Rational psi(long long n) { return Rational(dedekind_psi(n)); }
Rational p_k(long long n, long long k) { return Rational(p_recursive(n, k)); }
Rational lam(long long n, long long k) { return Rational(lambda_mobius(n, k)); }

// <(n+3)^2 / 12>; the remainder is never 6, so the half case cannot occur
Rational hardy_ni(long long n) {
  return Rational(nearest_int(Rational((n + 3) * (n + 3), 12)));
}

Rational hons_ni(long long n) {
  return Rational(nearest_int(Rational(n * n, 12)));
}

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> reg;
  auto add = [&](std::string id, std::string desc, long long window,
                 std::vector<long long> exceptions,
                 std::function<OptR(long long)> lhs,
                 std::function<OptR(long long)> rhs) {
    reg.push_back({std::move(id), std::move(desc), window,
                   std::move(exceptions), std::move(lhs), std::move(rhs)});
  };

  add("EB-PHI", "phi(n) = 2 (p(n,2) - Lambda(n,2))", 3, {1, 2},
      [](long long n) -> OptR { return phi(n); },
      [](long long n) -> OptR { return 2 * (p_k(n, 2) - lam(n, 2)); });

  add("EB-J2", "J_2(n) = 12 (p(n,3) - Lambda(n,3))", 4, {1, 2, 3},
      [](long long n) -> OptR { return j2(n); },
      [](long long n) -> OptR { return 12 * (p_k(n, 3) - lam(n, 3)); });

  add("HARDY-SUM", "p(n,1) + p(n,2) + p(n,3) = <(n+3)^2 / 12>", 1, {},
      [](long long n) -> OptR { return p_k(n, 1) + p_k(n, 2) + p_k(n, 3); },
      [](long long n) -> OptR { return hardy_ni(n); });

  add("HARDY-PHI",
      "phi(n) = 2 (<(n+3)^2/12> - Lambda(n,2) - Lambda(n,3) - 1 - J_2(n)/12)",
      4, {1, 2, 3},
      [](long long n) -> OptR { return phi(n); },
      [](long long n) -> OptR {
        return 2 * (hardy_ni(n) - lam(n, 2) - lam(n, 3) - 1 - j2(n) / 12);
      });

  add("HARDY-J2",
      "J_2(n) = 12 (<(n+3)^2/12> - Lambda(n,2) - Lambda(n,3) - 1 - phi(n)/2)",
      4, {1, 2, 3},
      [](long long n) -> OptR { return j2(n); },
      [](long long n) -> OptR {
        return 12 * (hardy_ni(n) - lam(n, 2) - lam(n, 3) - 1 - phi(n) / 2);
      });

  add("HONS-P3", "p(n,3) = <n^2 / 12>", 1, {},
      [](long long n) -> OptR { return p_k(n, 3); },
      [](long long n) -> OptR { return hons_ni(n); });

  add("HONS-J2", "J_2(n) = 12 (<n^2/12> - Lambda(n,3))", 4, {1, 2, 3},
      [](long long n) -> OptR { return j2(n); },
      [](long long n) -> OptR { return 12 * (hons_ni(n) - lam(n, 3)); });

  add("W-P2A", "p(n,2) = <(2n-1)/4>", 1, {},
      [](long long n) -> OptR { return p_k(n, 2); },
      [](long long n) -> OptR {
        return Rational(nearest_int(Rational(2 * n - 1, 4)));
      });

  add("W-P2B", "p(n,2) = (2n - 1 + (-1)^n) / 4", 1, {},
      [](long long n) -> OptR { return p_k(n, 2); },
      [](long long n) -> OptR {
        return Rational(2 * n - 1 + parity_sign(n), 4);
      });

  add("W-P3", "p(n,3) = (6n^2 - 7 - 9(-1)^n + 16 cos(2 pi n/3)) / 72", 1, {},
      [](long long n) -> OptR { return p_k(n, 3); },
      [](long long n) -> OptR {
        return (Rational(6 * n * n - 7 - 9 * parity_sign(n)) +
                16 * cos_two_pi_third(n)) /
               72;
      });

  add("W-PHI", "phi(n) = n + ((-1)^n - 1)/2 - 2 Lambda(n,2)", 3, {1, 2},
      [](long long n) -> OptR { return phi(n); },
      [](long long n) -> OptR {
        return Rational(n) + Rational(parity_sign(n) - 1, 2) - 2 * lam(n, 2);
      });

  add("W-J2",
      "J_2(n) = n^2 + (16 cos(2 pi n/3) - 7 - 9(-1)^n)/6 - 12 Lambda(n,3)", 4,
      {1, 2, 3},
      [](long long n) -> OptR { return j2(n); },
      [](long long n) -> OptR {
        return Rational(n * n) +
               (16 * cos_two_pi_third(n) - 7 - 9 * parity_sign(n)) / 6 -
               12 * lam(n, 3);
      });

  add("COMB-PHI",
      "phi(n) = 2 (<(n+3)^2/12> - Lambda(n,2) - 1 - p(n,3))", 3, {1, 2},
      [](long long n) -> OptR { return phi(n); },
      [](long long n) -> OptR {
        return 2 * (hardy_ni(n) - lam(n, 2) - 1 - p_k(n, 3));
      });

  add("COMB-J2",
      "J_2(n) = 12 (<(n+3)^2/12> - Lambda(n,3) - 1 - p(n,2))", 4, {1, 2, 3},
      [](long long n) -> OptR { return j2(n); },
      [](long long n) -> OptR {
        return 12 * (hardy_ni(n) - lam(n, 3) - 1 - p_k(n, 2));
      });

  add("PSI-A", "psi(n) = J_2(n) / (2 (p(n,2) - Lambda(n,2)))", 3, {1, 2},
      [](long long n) -> OptR { return psi(n); },
      [](long long n) -> OptR {
        Rational den = 2 * (p_k(n, 2) - lam(n, 2));
        if (den == 0) return std::nullopt;  // undefined below the window
        return j2(n) / den;
      });

  add("PSI-B", "psi(n) phi(n) = 12 (p(n,3) - Lambda(n,3))", 4, {1, 2, 3},
      [](long long n) -> OptR { return psi(n) * phi(n); },
      [](long long n) -> OptR { return 12 * (p_k(n, 3) - lam(n, 3)); });

  return reg;
}

}  // namespace

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> reg = build_registry();
  return reg;
}

const IdentityCheck* find_identity(const std::string& id) {
  for (const IdentityCheck& c : identity_registry())
    if (c.id == id) return &c;
  return nullptr;
}

VerificationReport verify_identity(const std::string& id, long long n_lo,
                                   long long n_hi) {
  const IdentityCheck* check = find_identity(id);
  if (!check) throw std::invalid_argument("unknown identity: " + id);
  if (n_lo < 1) n_lo = 1;

  VerificationReport report;
  report.id = id;
  report.n_lo = n_lo;
  report.n_hi = n_hi;

  auto start = std::chrono::steady_clock::now();
  for (long long n = n_lo; n <= n_hi; ++n) {
    std::optional<Rational> l = check->lhs(n);
    std::optional<Rational> r = check->rhs(n);
    bool agree = l.has_value() && r.has_value() && *l == *r;
    if (agree) continue;
    IdentityMismatch mm{n, std::move(l), std::move(r)};
    if (n >= check->window_min)
      report.failures.push_back(std::move(mm));
    else
      report.informational.push_back(std::move(mm));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace partkit
