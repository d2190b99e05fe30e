#pragma once

#include <compare>
#include <set>
#include <vector>

#include "partkit/types.hpp"

namespace partkit {

/* A partition of n into k parts, stored as nondecreasing parts
 * lambda_1 <= lambda_2 <= ... <= lambda_k.  The partition of 0 is the
 * empty sequence; by convention it counts as having one part. */
struct Partition {
  std::vector<long long> parts;

  long long n() const {
    long long s = 0;
    for (long long p : parts) s += p;
    return s;
  }
  long long k() const {
    return parts.empty() ? 1 : static_cast<long long>(parts.size());
  }
  bool is_empty() const { return parts.empty(); }

  auto operator<=>(const Partition&) const = default;
};

/* Statistics of the smallest part: sigma = the part itself, count = how
 * many times it occurs. */
struct SmallestPartStat {
  long long sigma = 0;
  long long count = 0;
};

// gcd of the parts; rejects the empty partition.
long long gcd_of(const Partition& p);

// Smallest part and its multiplicity; rejects the empty partition.
SmallestPartStat smallest_part_stat(const Partition& p);

/* Lazily yields the partitions of n into exactly k parts in
 * lexicographic order of the part sequence: [1,...,1,n-k+1] first,
 * [floor(n/k)-ish balanced] last.  Out-of-range (n,k) yields nothing;
 * (n,k) = (0,1) yields the single empty partition.
 *
 * Iterators own their state: copy the range, not an iterator mid-walk. */
class PartitionRange {
 public:
  class iterator {
   public:
    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& o) const { return done_ == o.done_; }
    bool operator!=(const iterator& o) const { return done_ != o.done_; }

   private:
    friend class PartitionRange;
    Partition current_;
    long long n_ = 0;
    long long k_ = 0;
    bool done_ = true;
  };

  PartitionRange(long long n, long long k) : n_(n), k_(k) {}
  iterator begin() const;
  iterator end() const { return iterator{}; }

 private:
  long long n_;
  long long k_;
};

inline PartitionRange partitions(long long n, long long k) {
  return PartitionRange(n, k);
}

/* All partitions of n: the k = 1..n ranges chained in increasing k,
 * lexicographic within each k.  all_partitions(0) yields the empty
 * partition once. */
class AllPartitionsRange {
 public:
  class iterator {
   public:
    const Partition& operator*() const { return *inner_; }
    const Partition* operator->() const { return &*inner_; }
    iterator& operator++();
    bool operator==(const iterator& o) const { return done_ == o.done_; }
    bool operator!=(const iterator& o) const { return done_ != o.done_; }

   private:
    friend class AllPartitionsRange;
    void settle();  // advance k_ until a nonempty inner range or the end
    long long n_ = 0;
    long long k_ = 0;
    PartitionRange::iterator inner_;
    bool done_ = true;
  };

  explicit AllPartitionsRange(long long n) : n_(n) {}
  iterator begin() const;
  iterator end() const { return iterator{}; }

 private:
  long long n_;
};

inline AllPartitionsRange all_partitions(long long n) {
  return AllPartitionsRange(n);
}

/* Brute-force oracles.  These exist to check the closed and recursive
 * formulas, not to be fast.  Calls above the enumeration budget are
 * refused: the default (n <= 80) caps a full walk at around 1.6e7
 * partitions. */
inline constexpr long long kEnumerationBudget = 80;

// Count of partitions of n into exactly k parts, by enumeration.
long long brute_p(long long n, long long k,
                  long long budget = kEnumerationBudget);

// Count of all partitions of n, by enumeration.
long long brute_p_total(long long n, long long budget = kEnumerationBudget);

// sum over partitions of n of sigma^a * count^b (smallest-part stats).
Integer brute_spt(long long a, long long b, long long n,
                  long long budget = kEnumerationBudget);

// Same restricted to partitions into exactly k parts.
Integer brute_spt_nk(long long a, long long b, long long n, long long k,
                     long long budget = kEnumerationBudget);

// Count of partitions of n into k parts with gcd > 1.
long long brute_lambda(long long n, long long k,
                       long long budget = kEnumerationBudget);

/* Count of relatively prime partitions of n into k parts.  The empty
 * partition of 0 counts as relatively prime, so brute_ppsi(0,1) = 1. */
long long brute_ppsi(long long n, long long k,
                     long long budget = kEnumerationBudget);

// Set of gcd values over partitions of n into k parts; empty when out of range.
std::set<long long> gcd_set(long long n, long long k,
                            long long budget = kEnumerationBudget);

}  // namespace partkit
