#include "partkit/partition_fn.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "partkit/numtheory.hpp"

namespace partkit {

namespace {

/* (n,k) -> p(n,k) cache.  Inserts are idempotent (the value for a key
 * never changes), so concurrent readers share the lock and a lost race
 * between two writers of the same key is harmless. */
class MemoTable {
 public:
  bool find(uint64_t key, Integer& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void store(uint64_t key, const Integer& value) {
    std::unique_lock lock(mu_);
    map_.try_emplace(key, value);
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<uint64_t, Integer> map_;
};

uint64_t pk_key(long long n, long long k) {
  return (static_cast<uint64_t>(n) << 20) | static_cast<uint64_t>(k);
}

MemoTable& p_memo() {
  static MemoTable t;
  return t;
}

}  // namespace

Integer eval_multisum(const MultiSumSpec& spec, long long term_budget) {
  if (spec.depth < 1)
    throw std::invalid_argument("eval_multisum: depth must be >= 1");
  if (!spec.upper_bound || !spec.summand)
    throw std::invalid_argument("eval_multisum: missing bound or summand");

  std::vector<long long> idx(static_cast<size_t>(spec.depth));
  Integer acc = 0;
  long long terms = 0;

  // depth-first walk of the index tuples; depth is small by contract
  auto walk = [&](auto&& self, int pos) -> void {
    long long lo = pos == 0 ? spec.outer_start : spec.inner_start;
    long long hi =
        spec.upper_bound(pos, std::span<const long long>(idx.data(), pos));
    for (long long v = lo; v <= hi; ++v) {
      idx[static_cast<size_t>(pos)] = v;
      if (pos + 1 == spec.depth) {
        if (++terms > term_budget)
          throw std::runtime_error(
              "eval_multisum: term budget " + std::to_string(term_budget) +
              " exceeded");
        acc += spec.summand(std::span<const long long>(idx.data(), idx.size()));
      } else {
        self(self, pos + 1);
      }
    }
  };
  walk(walk, 0);
  return acc;
}

Integer p_recursive(long long n, long long k) {
  if (n == 0 && k == 1) return 1;
  if (n < 1 || k < 1 || k > n) return 0;
  if (k == 1) return 1;

  uint64_t key = pk_key(n, k);
  Integer cached;
  if (p_memo().find(key, cached)) return cached;

  // strip m copies of the smallest part k..; what remains has v < k parts
  Integer acc = 0;
  for (long long m = 1; m <= n / k; ++m)
    for (long long v = 1; v <= k - 1; ++v) acc += p_recursive(n - k * m, v);

  p_memo().store(key, acc);
  return acc;
}

Integer p_closed(long long n, long long k, const ClosedFormLimits& limits) {
  if (n == 0 && k == 1) return 1;
  if (n < 1 || k < 1 || k > n) return 0;
  if (k == 1) return 1;
  if (k == 2) return n / 2;
  if (k > limits.max_k)
    throw std::runtime_error(
        "p_closed: k = " + std::to_string(k) +
        " exceeds the closed-form k guard (max_k = " +
        std::to_string(limits.max_k) + "); raise the guard to proceed");

  /* Index at position pos stands for m_{k-pos}: the multiplicity of the
   * part size s = k - pos.  m_k starts at 1, the rest at 0; each bound
   * spends the weight the outer indices left over. */
  MultiSumSpec spec;
  spec.depth = static_cast<int>(k - 2);
  spec.outer_start = 1;
  spec.inner_start = 0;
  spec.upper_bound = [n, k](int pos, std::span<const long long> assigned) {
    long long rem = n;
    for (int q = 0; q < pos; ++q) rem -= (k - q) * assigned[static_cast<size_t>(q)];
    return rem / (k - pos);
  };
  spec.summand = [n, k](std::span<const long long> m) {
    long long rem = 2 + n;
    for (size_t q = 0; q < m.size(); ++q)
      rem -= (k - static_cast<long long>(q)) * m[q];
    return Integer(rem / 2);
  };
  return eval_multisum(spec, limits.term_budget);
}

Integer p_total(long long n, PStrategy strategy,
                const ClosedFormLimits& limits) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  Integer acc = 0;
  for (long long k = 1; k <= n; ++k)
    acc += strategy == PStrategy::Recursive ? p_recursive(n, k)
                                            : p_closed(n, k, limits);
  return acc;
}

Integer p_pentagonal(long long n) {
  if (n < 0) return 0;
  static std::mutex mu;
  static std::vector<Integer> cache{1};  // cache[m] = p(m)
  std::lock_guard lock(mu);
  for (long long m = static_cast<long long>(cache.size()); m <= n; ++m) {
    Integer acc = 0;
    for (long long j = 1;; ++j) {
      long long g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      int sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * cache[static_cast<size_t>(m - g1)];
      long long g2 = j * (3 * j + 1) / 2;
      if (g2 <= m) acc += sign * cache[static_cast<size_t>(m - g2)];
    }
    cache.push_back(acc);
  }
  return cache[static_cast<size_t>(n)];
}

SmallKForm small_k_form_from_string(const std::string& name) {
  if (name == "floor") return SmallKForm::Floor;
  if (name == "nearest") return SmallKForm::Nearest;
  if (name == "parity") return SmallKForm::Parity;
  if (name == "trig") return SmallKForm::Trig;
  throw std::invalid_argument("unknown small-k form: " + name);
}

Integer p_small_k(long long n, long long k, SmallKForm form) {
  if (n == 0 && k == 1) return 1;
  if (n < 1 || k < 1) return 0;

  auto exact = [](const Rational& x) {
    if (denominator(x) != 1)
      throw std::logic_error("p_small_k: expression is not an integer");
    return numerator(x);
  };

  switch (k) {
    case 1:
      if (form == SmallKForm::Floor) return 1;
      break;
    case 2:
      switch (form) {
        case SmallKForm::Floor:
          return n / 2;
        case SmallKForm::Nearest:
          return nearest_int(Rational(2 * n - 1, 4));
        case SmallKForm::Parity:
          return exact(Rational(2 * n - 1 + parity_sign(n), 4));
        default:
          break;
      }
      break;
    case 3:
      switch (form) {
        case SmallKForm::Floor: {
          Integer acc = 0;
          for (long long m = 1; m <= n / 3; ++m) acc += (2 + n - 3 * m) / 2;
          return acc;
        }
        case SmallKForm::Nearest:
          return nearest_int(Rational(n * n, 12));
        case SmallKForm::Trig:
          return exact((Rational(6 * n * n - 7 - 9 * parity_sign(n)) +
                        16 * cos_two_pi_third(n)) /
                       72);
        default:
          break;
      }
      break;
    default:
      break;
  }
  throw std::invalid_argument("p_small_k: form not defined for k = " +
                              std::to_string(k));
}

}  // namespace partkit
