#pragma once

#include <string>
#include <vector>

#include "symchar/integer.hpp"
#include "symchar/partition.hpp"
#include "symchar/verdict.hpp"

namespace symchar {

inline constexpr int kDefaultSeriesOrder = 60;

/// Power series in q truncated after q^order; all arithmetic stays at that order.
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(0) {}
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<Integer> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Integer& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  // f(q) -> f(q^r), truncated.
  TruncSeries substitute_power(int r) const;
  TruncSeries scaled(const Integer& factor) const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  std::string str() const;

 private:
  std::vector<Integer> coeffs_;
};

/// n = p^nu(n) * w(n) with p not dividing w(n).
class PValuation {
 public:
  // Throws std::invalid_argument unless p is prime.
  explicit PValuation(int p);
  int prime() const { return p_; }
  int nu(long n) const;
  long w(long n) const;

 private:
  int p_;
};

// prod_{j in S} 1/(1 - q^j): partitions with parts in S.
TruncSeries p_series(const PartSet& parts, int order);
// sum_{i in S} q^i/(1 - q^i): divisors in S.
TruncSeries t_series(const PartSet& parts, int order);
// Total number of parts over partitions with parts in S, as the product P_S * T_S.
TruncSeries l_series(const PartSet& parts, int order);
// The same series by summing lengths over enumerated partitions.
TruncSeries l_series_direct(const PartSet& parts, int order);
// sum_{r in S} nu_p(r) q^r/(1 - q^r).
TruncSeries e_series(const PartSet& parts, int p, int order);
// sum_{r in S} sum_{j >= 1} q^{r p^j}/(1 - q^{r p^j}).
TruncSeries f_series(const PartSet& parts, int p, int order);
// sum_{v >= 1} binom(v+1, 2) T'_S(q^{p^v}) with T'_S the part of T_S on exponents prime to p;
// requires S p-divisible and p-closed.
TruncSeries closed_ef(const PartSet& parts, int p, int order);

struct AbSeries {
  TruncSeries a;  // P_S * E: nu_p of prod a_mu over P(n, S)
  TruncSeries b;  // P_S * F: nu_p of prod b_mu over P(n, S)
};

AbSeries ab_series(const PartSet& parts, int p, int order);

struct DirectProducts {
  Integer a_product = 1;
  Integer b_product = 1;
  int nu_a = 0;
  int nu_b = 0;
};

// Enumerates P(n, S) and takes valuations of the products of a_mu and b_mu.
DirectProducts direct_valuations(int n, const PartSet& parts, int p);

// Number of divisors of m lying in S.
long divisors_in(long m, const PartSet& parts);

// Coefficientwise identities and inequalities between the series above, plus a
// comparison of A and B against direct enumeration for n <= min(order, enumeration_cap).
Verdict verify_valuation_series(const PartSet& parts, int p, int order, int enumeration_cap = 40);

}  // namespace symchar
