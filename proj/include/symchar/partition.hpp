#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/integer.hpp"

namespace symchar {

/// An integer partition, stored as a weakly decreasing sequence of positive parts.
///
/// The natural ordering (operator<=>) is lexicographic on the decreasing sequence.
/// Restricted to partitions of the same n this is the total order used to index
/// every character table in the library, e.g. for n = 4:
/// (1^4) < (1^2,2) < (2^2) < (1,3) < (4).
class Partition {
 public:
  Partition() = default;
  // Parts in any order; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  // Text syntax: comma-separated terms "i" or "i^m" in any order, optionally
  // wrapped in parentheses or brackets. "" and "()" denote the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  // Exponential notation with increasing parts, e.g. "1^2,3". Parses back to *this.
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Three-way comparison for partitions of the same n; throws std::invalid_argument otherwise.
std::strong_ordering compare(const Partition& lambda, const Partition& mu);

// Part size i -> m_i. Only sizes that occur are present.
std::map<int, int> multiplicities(const Partition& lambda);

struct PartitionStats {
  Integer a;  // prod i^{m_i}
  Integer b;  // prod m_i!
  Integer z;  // a * b, the centralizer order
};

PartitionStats stats(const Partition& lambda);

struct PartitionFlags {
  bool is_k_bounded = false;
  bool is_ell_regular = false;        // every multiplicity < ell
  bool is_ell_class_regular = false;  // no part divisible by ell
};

PartitionFlags predicates(const Partition& lambda, int ell, int k);

bool is_k_bounded(const Partition& lambda, int k);
bool is_ell_regular(const Partition& lambda, int ell);
bool is_ell_class_regular(const Partition& lambda, int ell);

// Dominance order: every partial sum of lambda is >= the matching partial sum of mu.
bool dominates(const Partition& lambda, const Partition& mu);

/// The set S of admissible part sizes.
class PartSet {
 public:
  enum class Kind { All, Bounded, NonMultiples, Explicit };

  static PartSet all();
  static PartSet bounded(int k);
  static PartSet non_multiples(int ell);
  static PartSet explicit_set(std::vector<int> members);

  // "all", "bounded:K", "nonmult:L" or "explicit:a,b,c".
  static PartSet parse(std::string_view text);

  Kind kind() const { return kind_; }
  int bound() const { return param_; }
  int modulus() const { return param_; }
  const std::vector<int>& members() const { return members_; }

  bool contains(int part) const;

  // pr in S implies r in S.
  bool is_p_divisible(int p) const;
  // d in S implies pd in S. Explicit sets are finite, so for them the test only
  // looks at d with p*d <= horizon.
  bool is_p_closed(int p, int horizon) const;

  std::string str() const;

  friend bool operator==(const PartSet&, const PartSet&) = default;

 private:
  PartSet(Kind kind, int param, std::vector<int> members)
      : kind_(kind), param_(param), members_(std::move(members)) {}

  Kind kind_ = Kind::All;
  int param_ = 0;
  std::vector<int> members_;
};

// Visits the partitions of n with all parts in S in ascending order.
void for_each_partition(int n, const PartSet& parts, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate(int n, const PartSet& parts = PartSet::all());

}  // namespace symchar
