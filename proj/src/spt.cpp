#include "partkit/spt.hpp"

#include <stdexcept>
#include <string>

#include "partkit/partition_fn.hpp"

namespace partkit {

namespace {

// floor(k floor(n/k) / n): 1 when k | n, else 0.  Requires n >= 1.
long long divisibility_flag(long long n, long long k) {
  return (k * (n / k)) / n;
}

unsigned long long ue(long long e) { return static_cast<unsigned long long>(e); }

}  // namespace

Integer spt_nk(const SptParams& params, long long n, long long k) {
  if (params.a < 0 || params.b < 0)
    throw std::invalid_argument("spt_nk: exponents must be nonnegative");
  if (n == 0 && k == 1) return 1;
  if (n < 1 || k < 1 || k > n) return 0;
  if (k == 1)  // the single partition {n}: sigma = n, multiplicity 1
    return ipow(n, ue(params.a));

  Integer acc = ipow(n / k, ue(params.a)) * divisibility_flag(n, k) *
                (ipow(k, ue(params.b)) - ipow(k - 1, ue(params.b)));
  for (long long m = 1; m <= n / k; ++m) {
    Integer inner = 0;
    for (long long v = 1; v <= k - 1; ++v)
      inner += ipow(k - v, ue(params.b)) * p_recursive(n - k * m, v);
    acc += ipow(m, ue(params.a)) * inner;
  }
  return acc;
}

Integer spt_total(const SptParams& params, long long n) {
  if (n < 1)
    throw std::invalid_argument("spt_total: n must be >= 1");
  Integer acc = 0;
  for (long long k = 1; k <= n; ++k) acc += spt_nk(params, n, k);
  return acc;
}

SptForm spt_form_from_string(const std::string& name) {
  if (name == "spt10") return SptForm::Spt10;
  if (name == "spta0") return SptForm::SptA0;
  if (name == "spt01") return SptForm::Spt01;
  if (name == "spt0b") return SptForm::Spt0B;
  if (name == "spt11") return SptForm::Spt11;
  throw std::invalid_argument("unknown spt form: " + name);
}

/* Each branch evaluates its display directly; none call spt_nk.  The
 * shared prologue applies the boundary conventions, and k = 1 is the
 * single partition {n} in every case. */
Integer spt_special(SptForm form, long long n, long long k, long long extra) {
  if (extra < 0)
    throw std::invalid_argument("spt_special: exponent must be nonnegative");
  if (n == 0 && k == 1) return 1;
  if (n < 1 || k < 1 || k > n) return 0;

  auto sum_over = [&](auto&& weight) {
    // sum_{m=1}^{floor(n/k)} sum_{v=1}^{k-1} weight(m, v) p(n - k m, v)
    Integer acc = 0;
    for (long long m = 1; m <= n / k; ++m)
      for (long long v = 1; v <= k - 1; ++v)
        acc += weight(m, v) * p_recursive(n - k * m, v);
    return acc;
  };

  switch (form) {
    case SptForm::Spt10:
      if (k == 1) return n;
      return sum_over([](long long m, long long) { return Integer(m); });
    case SptForm::SptA0:
      if (k == 1) return ipow(n, ue(extra));
      return sum_over(
          [&](long long m, long long) { return ipow(m, ue(extra)); });
    case SptForm::Spt01:
      if (k == 1) return 1;
      return divisibility_flag(n, k) +
             sum_over([&](long long, long long v) { return Integer(k - v); });
    case SptForm::Spt0B:
      if (k == 1) return 1;
      return divisibility_flag(n, k) *
                 (ipow(k, ue(extra)) - ipow(k - 1, ue(extra))) +
             sum_over(
                 [&](long long, long long v) { return ipow(k - v, ue(extra)); });
    case SptForm::Spt11:
      if (k == 1) return n;
      return Integer(n / k) * divisibility_flag(n, k) +
             sum_over([&](long long m, long long v) { return Integer(m * (k - v)); });
  }
  throw std::logic_error("spt_special: unreachable");
}

InequalityWitness check_inequality(const SptParams& params, long long n,
                                   long long k) {
  InequalityWitness w;
  w.partition_count = p_recursive(n, k);
  w.spt_value = spt_nk(params, n, k);
  w.holds = w.partition_count <= w.spt_value;
  w.equal = w.partition_count == w.spt_value;
  return w;
}

}  // namespace partkit
