#include "partkit/enumerate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace partkit {

namespace {

void check_budget(long long n, long long budget) {
  if (n > budget)
    throw std::runtime_error(
        "enumeration refused: n = " + std::to_string(n) +
        " exceeds the enumeration budget " + std::to_string(budget) +
        " (brute force is an oracle, not a production path)");
}

/* Advance a nondecreasing k-part partition of n to its lexicographic
 * successor.  Scan for the rightmost position (excluding the last) whose
 * value can grow by one while leaving enough weight to keep every later
 * part at least as large; level everything after it and dump the
 * remainder on the last part.  Returns false when exhausted. */
bool next_partition(std::vector<long long>& a) {
  long long k = static_cast<long long>(a.size());
  if (k <= 1) return false;
  long long tail = a[k - 1];  // sum of a[i..k-1] while i walks left
  for (long long i = k - 2; i >= 0; --i) {
    tail += a[i];
    long long v = a[i] + 1;
    if (tail >= v * (k - i)) {
      for (long long j = i; j < k - 1; ++j) a[j] = v;
      a[k - 1] = tail - v * (k - 1 - i);
      return true;
    }
  }
  return false;
}

}  // namespace

long long gcd_of(const Partition& p) {
  if (p.is_empty())
    throw std::invalid_argument("gcd_of: empty partition has no gcd");
  long long g = 0;
  for (long long part : p.parts) g = std::gcd(g, part);
  return g;
}

SmallestPartStat smallest_part_stat(const Partition& p) {
  if (p.is_empty())
    throw std::invalid_argument(
        "smallest_part_stat: empty partition has no smallest part");
  SmallestPartStat s;
  s.sigma = p.parts.front();  // parts are nondecreasing
  for (long long part : p.parts) {
    if (part != s.sigma) break;
    ++s.count;
  }
  return s;
}

PartitionRange::iterator PartitionRange::begin() const {
  iterator it;
  it.n_ = n_;
  it.k_ = k_;
  if (n_ == 0 && k_ == 1) {
    it.done_ = false;  // the empty partition
    return it;
  }
  if (n_ < 1 || k_ < 1 || k_ > n_) return it;  // nothing to yield
  it.current_.parts.assign(static_cast<size_t>(k_), 1);
  it.current_.parts.back() = n_ - k_ + 1;
  it.done_ = false;
  return it;
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  if (done_) return *this;
  if (current_.parts.empty() || !next_partition(current_.parts)) done_ = true;
  return *this;
}

void AllPartitionsRange::iterator::settle() {
  while (k_ <= (n_ == 0 ? 1 : n_)) {
    inner_ = PartitionRange(n_, k_).begin();
    if (inner_ != PartitionRange(n_, k_).end()) {
      done_ = false;
      return;
    }
    ++k_;
  }
  done_ = true;
}

AllPartitionsRange::iterator AllPartitionsRange::begin() const {
  iterator it;
  it.n_ = n_;
  it.k_ = 1;
  if (n_ < 0) return it;
  it.settle();
  return it;
}

AllPartitionsRange::iterator& AllPartitionsRange::iterator::operator++() {
  if (done_) return *this;
  ++inner_;
  if (inner_ == PartitionRange::iterator{}) {
    ++k_;
    settle();
  }
  return *this;
}

long long brute_p(long long n, long long k, long long budget) {
  check_budget(n, budget);
  long long count = 0;
  for ([[maybe_unused]] const Partition& p : partitions(n, k)) ++count;
  return count;
}

long long brute_p_total(long long n, long long budget) {
  check_budget(n, budget);
  long long count = 0;
  for ([[maybe_unused]] const Partition& p : all_partitions(n)) ++count;
  return count;
}

namespace {

Integer spt_weight(const Partition& p, long long a, long long b) {
  SmallestPartStat s = smallest_part_stat(p);
  return ipow(s.sigma, static_cast<unsigned long long>(a)) *
         ipow(s.count, static_cast<unsigned long long>(b));
}

}  // namespace

Integer brute_spt(long long a, long long b, long long n, long long budget) {
  check_budget(n, budget);
  Integer acc = 0;
  for (const Partition& p : all_partitions(n))
    if (!p.is_empty()) acc += spt_weight(p, a, b);
  return acc;
}

Integer brute_spt_nk(long long a, long long b, long long n, long long k,
                     long long budget) {
  check_budget(n, budget);
  Integer acc = 0;
  for (const Partition& p : partitions(n, k))
    if (!p.is_empty()) acc += spt_weight(p, a, b);
  return acc;
}

long long brute_lambda(long long n, long long k, long long budget) {
  check_budget(n, budget);
  long long count = 0;
  for (const Partition& p : partitions(n, k))
    if (!p.is_empty() && gcd_of(p) > 1) ++count;
  return count;
}

long long brute_ppsi(long long n, long long k, long long budget) {
  check_budget(n, budget);
  long long count = 0;
  for (const Partition& p : partitions(n, k))
    if (p.is_empty() || gcd_of(p) == 1) ++count;  // empty counts as coprime
  return count;
}

std::set<long long> gcd_set(long long n, long long k, long long budget) {
  check_budget(n, budget);
  std::set<long long> gcds;
  for (const Partition& p : partitions(n, k))
    if (!p.is_empty()) gcds.insert(gcd_of(p));
  return gcds;
}

}  // namespace partkit
