#include "partkit/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "partkit/spt.hpp"

namespace partkit {

TruncatedSeries::TruncatedSeries(long long order) {
  if (order < 0)
    throw std::invalid_argument("TruncatedSeries: order must be >= 0");
  c_.assign(static_cast<size_t>(order) + 1, Integer(0));
}

TruncatedSeries TruncatedSeries::one(long long order) {
  TruncatedSeries s(order);
  s.c_[0] = 1;
  return s;
}

const Integer& TruncatedSeries::coeff(long long i) const {
  if (i < 0 || i > order())
    throw std::out_of_range("TruncatedSeries: coefficient " +
                            std::to_string(i) + " beyond order " +
                            std::to_string(order()));
  return c_[static_cast<size_t>(i)];
}

void TruncatedSeries::set_coeff(long long i, Integer v) {
  if (i < 0 || i > order())
    throw std::out_of_range("TruncatedSeries: coefficient " +
                            std::to_string(i) + " beyond order " +
                            std::to_string(order()));
  c_[static_cast<size_t>(i)] = std::move(v);
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  long long n = std::min(f.order(), g.order());
  TruncatedSeries r(n);
  for (long long i = 0; i <= n; ++i) r.set_coeff(i, f.coeff(i) + g.coeff(i));
  return r;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  long long n = std::min(f.order(), g.order());
  TruncatedSeries r(n);
  for (long long i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (long long j = 0; i + j <= n; ++j) {
      if (g.coeff(j) == 0) continue;
      r.set_coeff(i + j, r.coeff(i + j) + f.coeff(i) * g.coeff(j));
    }
  }
  return r;
}

TruncatedSeries invert(const TruncatedSeries& f) {
  const Integer& c0 = f.coeff(0);
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument(
        "invert: constant coefficient must be 1 or -1 for an exact inverse");
  long long n = f.order();
  TruncatedSeries r(n);
  r.set_coeff(0, c0);  // c0 is its own inverse
  for (long long i = 1; i <= n; ++i) {
    Integer s = 0;
    for (long long j = 1; j <= i; ++j) s += f.coeff(j) * r.coeff(i - j);
    r.set_coeff(i, -c0 * s);
  }
  return r;
}

namespace {

// f * q^s, coefficients past the order falling away
TruncatedSeries shift(const TruncatedSeries& f, long long s) {
  TruncatedSeries r(f.order());
  for (long long i = s; i <= f.order(); ++i) r.set_coeff(i, f.coeff(i - s));
  return r;
}

// f / (1 - q^s) as the geometric sum: r[i] = f[i] + r[i-s]
TruncatedSeries geometric_div(const TruncatedSeries& f, long long s) {
  TruncatedSeries r(f.order());
  for (long long i = 0; i <= f.order(); ++i) {
    Integer v = f.coeff(i);
    if (i >= s) v += r.coeff(i - s);
    r.set_coeff(i, std::move(v));
  }
  return r;
}

// f += c * g
void accumulate(TruncatedSeries& f, const Integer& c,
                const TruncatedSeries& g) {
  for (long long i = 0; i <= f.order(); ++i)
    f.set_coeff(i, f.coeff(i) + c * g.coeff(i));
}

}  // namespace

TruncatedSeries pochhammer_q(long long n, long long order) {
  if (n < 0) throw std::invalid_argument("pochhammer_q: n must be >= 0");
  TruncatedSeries r = TruncatedSeries::one(order);
  // factors (1 - q^m) with m > order are 1 at this truncation
  for (long long m = 1; m <= std::min(n, order); ++m) {
    TruncatedSeries shifted = shift(r, m);
    accumulate(r, Integer(-1), shifted);
  }
  return r;
}

std::vector<Integer> gf_p_coefficients(long long order) {
  TruncatedSeries inv = invert(pochhammer_q(order, order));
  std::vector<Integer> out;
  out.reserve(static_cast<size_t>(order) + 1);
  for (long long i = 0; i <= order; ++i) out.push_back(inv.coeff(i));
  return out;
}

namespace {

/* sum_{n=1}^{order} weight(n) * (q^n (q;q)_{n-1} / (1-q^n))^b, all times
 * 1/(q;q)_inf.  The running Pochhammer picks up its (1 - q^n) factor
 * after the term that uses it. */
TruncatedSeries spt_series(long long a, long long b, long long order) {
  TruncatedSeries sum(order);
  TruncatedSeries poch = TruncatedSeries::one(order);  // (q;q)_{n-1}
  for (long long n = 1; n <= order; ++n) {
    TruncatedSeries term = geometric_div(shift(poch, n), n);
    TruncatedSeries powered = term;
    for (long long i = 1; i < b; ++i) powered = mul(powered, term);
    accumulate(sum, ipow(n, static_cast<unsigned long long>(a)), powered);
    TruncatedSeries shifted = shift(poch, n);
    accumulate(poch, Integer(-1), shifted);  // poch *= (1 - q^n)
  }
  return mul(sum, invert(pochhammer_q(order, order)));
}

}  // namespace

std::vector<Integer> gf_spt(long long a, long long b, long long order) {
  bool cited = (a == 0 && b == 1) || (a == 1 && b == 1);
  if (!cited)
    throw std::invalid_argument(
        "gf_spt: only the (0,1) and (1,1) variants are established; "
        "use conjecture_report for other exponents");
  TruncatedSeries s = spt_series(a, b, order);
  std::vector<Integer> out;
  out.reserve(static_cast<size_t>(order) + 1);
  for (long long i = 0; i <= order; ++i) out.push_back(s.coeff(i));
  return out;
}

ConjectureReport conjecture_report(long long a, long long b, long long order) {
  if (a < 0 || b < 1)
    throw std::invalid_argument(
        "conjecture_report: need a >= 0 and b >= 1");
  if (order < 1)
    throw std::invalid_argument("conjecture_report: order must be >= 1");

  ConjectureReport rep;
  rep.a = a;
  rep.b = b;
  rep.order = order;

  TruncatedSeries s = spt_series(a, b, order);
  for (long long n = 1; n <= order; ++n) {
    ConjectureReport::Row row{n, s.coeff(n), spt_total({a, b}, n), false};
    row.agree = row.series_coeff == row.spt_value;
    if (!row.agree) {
      rep.all_agree = false;
      if (!rep.first_mismatch) rep.first_mismatch = n;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace partkit
