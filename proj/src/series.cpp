#include "symchar/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace symchar {

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

TruncSeries::TruncSeries(int order, std::vector<Integer> coeffs) : TruncSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::substitute_power(int r) const {
  if (r < 1) throw std::invalid_argument("substitute_power needs r >= 1");
  TruncSeries out(order());
  for (long i = 0; i * r <= order(); ++i) out[static_cast<int>(i * r)] = (*this)[static_cast<int>(i)];
  return out;
}

TruncSeries TruncSeries::scaled(const Integer& factor) const {
  TruncSeries out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  const int n = a.order();
  TruncSeries c(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::string TruncSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].get_str();
  }
  return out;
}

PValuation::PValuation(int p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

int PValuation::nu(long n) const {
  if (n <= 0) throw std::invalid_argument("valuation of a nonpositive integer");
  int v = 0;
  while (n % p_ == 0) {
    n /= p_;
    ++v;
  }
  return v;
}

long PValuation::w(long n) const {
  if (n <= 0) throw std::invalid_argument("p'-part of a nonpositive integer");
  while (n % p_ == 0) n /= p_;
  return n;
}

namespace {

// Adds weight * q^r/(1 - q^r) = weight * (q^r + q^{2r} + ...).
void add_geometric(TruncSeries& s, long r, long weight) {
  if (weight == 0) return;
  for (long m = r; m <= s.order(); m += r) s[static_cast<int>(m)] += weight;
}

}  // namespace

TruncSeries p_series(const PartSet& parts, int order) {
  TruncSeries s(order);
  s[0] = 1;
  for (int j = 1; j <= order; ++j) {
    if (!parts.contains(j)) continue;
    for (int i = j; i <= order; ++i) s[i] += s[i - j];
  }
  return s;
}

TruncSeries t_series(const PartSet& parts, int order) {
  TruncSeries s(order);
  for (int i = 1; i <= order; ++i)
    if (parts.contains(i)) add_geometric(s, i, 1);
  return s;
}

TruncSeries l_series(const PartSet& parts, int order) { return p_series(parts, order) * t_series(parts, order); }

TruncSeries l_series_direct(const PartSet& parts, int order) {
  TruncSeries s(order);
  for (int n = 0; n <= order; ++n) {
    long total = 0;
    for_each_partition(n, parts, [&](const Partition& lambda) { total += lambda.length(); });
    s[n] = total;
  }
  return s;
}

TruncSeries e_series(const PartSet& parts, int p, int order) {
  const PValuation val(p);
  TruncSeries s(order);
  for (int r = 1; r <= order; ++r)
    if (parts.contains(r)) add_geometric(s, r, val.nu(r));
  return s;
}

TruncSeries f_series(const PartSet& parts, int p, int order) {
  const PValuation val(p);
  TruncSeries s(order);
  for (long r = 1; r <= order; ++r) {
    if (!parts.contains(static_cast<int>(r))) continue;
    for (long step = r * p; step <= order; step *= p) add_geometric(s, step, 1);
  }
  return s;
}

TruncSeries closed_ef(const PartSet& parts, int p, int order) {
  const PValuation val(p);
  if (!parts.is_p_divisible(p) || !parts.is_p_closed(p, order)) {
    throw std::invalid_argument("closed form needs a part set that is " + std::to_string(p) + "-divisible and " +
                                std::to_string(p) + "-closed");
  }
  // Sum over v >= 1 of binom(v+1, 2) T'_S(q^{p^v}), where T'_S keeps only the exponents prime to p.
  // Substituting the full T_S would count each n once for every v <= nu_p(n).
  TruncSeries t = t_series(parts, order);
  for (int m = p; m <= order; m += p) t[m] = 0;
  TruncSeries s(order);
  long power = p;
  for (long v = 1; power <= order; ++v, power *= p) s += t.substitute_power(static_cast<int>(power)).scaled(v * (v + 1) / 2);
  return s;
}

AbSeries ab_series(const PartSet& parts, int p, int order) {
  const TruncSeries ps = p_series(parts, order);
  return {ps * e_series(parts, p, order), ps * f_series(parts, p, order)};
}

namespace {

// Pairwise product; multiplying into one accumulator is quadratic once the result gets large.
Integer balanced_product(std::vector<Integer> xs) {
  if (xs.empty()) return 1;
  while (xs.size() > 1) {
    std::size_t half = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) xs[half++] = xs[i] * xs[i + 1];
    if (xs.size() % 2) xs[half++] = std::move(xs.back());
    xs.resize(half);
  }
  return xs.front();
}

}  // namespace

DirectProducts direct_valuations(int n, const PartSet& parts, int p) {
  const PValuation val(p);
  std::vector<Integer> as, bs;
  for_each_partition(n, parts, [&](const Partition& mu) {
    auto st = stats(mu);
    as.push_back(std::move(st.a));
    bs.push_back(std::move(st.b));
  });
  DirectProducts out;
  out.a_product = balanced_product(as);
  out.b_product = balanced_product(bs);
  out.nu_a = valuation(out.a_product, static_cast<unsigned long>(p));
  out.nu_b = valuation(out.b_product, static_cast<unsigned long>(p));
  return out;
}

long divisors_in(long m, const PartSet& parts) {
  long count = 0;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0 && parts.contains(static_cast<int>(d))) ++count;
  return count;
}

namespace {

// First index where pred fails, or -1.
template <typename Pred>
int first_failure(int from, int to, Pred pred) {
  for (int n = from; n <= to; ++n)
    if (!pred(n)) return n;
  return -1;
}

void report(Verdict& v, const std::string& name, int failure, const std::string& statement,
            Evidence evidence = Evidence::Proved) {
  Check& c = v.add(name, failure < 0, statement, evidence);
  if (failure >= 0) with(c, "first_failing_n", std::to_string(failure));
}

}  // namespace

Verdict verify_valuation_series(const PartSet& parts, int p, int order, int enumeration_cap) {
  const PValuation val(p);
  Verdict v;
  v.subject = "S = " + parts.str() + ", p = " + std::to_string(p) + ", order " + std::to_string(order);

  const TruncSeries ps = p_series(parts, order);
  const TruncSeries t = t_series(parts, order);
  const TruncSeries e = e_series(parts, p, order);
  const TruncSeries f = f_series(parts, p, order);
  const TruncSeries a = ps * e;
  const TruncSeries b = ps * f;
  const int cap = std::min(order, enumeration_cap);

  {
    const TruncSeries l = ps * t;
    int bad = first_failure(0, cap, [&](int n) {
      long total = 0;
      for_each_partition(n, parts, [&](const Partition& lambda) { total += lambda.length(); });
      return l[n] == total;
    });
    report(v, "parts_count", bad, "L_S = P_S * T_S against enumerated part counts");
  }

  report(v, "e_direct", first_failure(1, order, [&](int n) {
           long sum = 0;
           for (long d = 1; d <= n; ++d)
             if (n % d == 0 && parts.contains(static_cast<int>(d))) sum += val.nu(d);
           return e[n] == sum;
         }),
         "e_{S,p}(n) = sum of nu_p(d) over divisors d of n in S");

  std::vector<DirectProducts> direct;
  for (int n = 0; n <= cap; ++n) direct.push_back(direct_valuations(n, parts, p));
  report(v, "a_series_direct", first_failure(0, cap, [&](int n) { return a[n] == direct[n].nu_a; }),
         "coefficients of P_S * E_{S,p} equal nu_p(a_{P(n,S)})");
  report(v, "b_series_direct", first_failure(0, cap, [&](int n) { return b[n] == direct[n].nu_b; }),
         "coefficients of P_S * F_{S,p} equal nu_p(b_{P(n,S)})");

  if (parts.is_p_divisible(p)) {
    report(v, "f_formula", first_failure(1, order, [&](int n) { return f[n] == val.nu(n) * divisors_in(n, parts) - e[n]; }),
           "f_{S,p}(n) = nu_p(n) t_S(n) - e_{S,p}(n)");
    report(v, "f_ge_e", first_failure(1, order, [&](int n) { return f[n] >= e[n]; }), "f_{S,p}(n) >= e_{S,p}(n)");
    report(v, "a_le_b", first_failure(0, order, [&](int n) { return a[n] <= b[n]; }), "a_{S,p}(n) <= b_{S,p}(n)");
  } else {
    const std::string why = "S is not " + std::to_string(p) + "-divisible";
    v.add_not_applicable("f_formula", why);
    v.add_not_applicable("f_ge_e", why);
    v.add_not_applicable("a_le_b", why);
  }

  if (parts.is_p_divisible(p) && parts.is_p_closed(p, order)) {
    const TruncSeries closed = closed_ef(parts, p, order);
    int bad = first_failure(1, order, [&](int n) {
      const long nu = val.nu(n);
      const long expected = nu * (nu + 1) / 2 * divisors_in(val.w(n), parts);
      return e[n] == expected && f[n] == expected && closed[n] == expected;
    });
    report(v, "e_eq_f_closed", bad, "e = f = binom(nu_p(n)+1, 2) t_S(w(n)), matching the closed series");
    report(v, "a_eq_b", first_failure(0, order, [&](int n) { return a[n] == b[n]; }), "a_{S,p}(n) = b_{S,p}(n)");
  } else {
    const std::string why = "S is not both " + std::to_string(p) + "-divisible and " + std::to_string(p) + "-closed";
    v.add_not_applicable("e_eq_f_closed", why);
    v.add_not_applicable("a_eq_b", why);
  }
  return v;
}

}  // namespace symchar
