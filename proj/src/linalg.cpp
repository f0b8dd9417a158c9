#include "symchar/linalg.hpp"

#include <algorithm>
#include <utility>

namespace symchar {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

std::optional<IntMatrix> to_integral(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  }
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

StructureFlags structure_checks(const RatMatrix& m) {
  StructureFlags flags;
  flags.is_integral = is_integral(m);
  if (m.is_square()) {
    flags.is_lower_unitriangular = is_lower_unitriangular(m);
    flags.is_upper_unitriangular = is_upper_unitriangular(m);
  }
  return flags;
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  Integer result = a(n - 1, n - 1);
  return sign < 0 ? Integer(-result) : result;
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return result;
}

std::string SnfResult::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += ",";
    out += invariant_factors[i].get_str();
  }
  return out + ")";
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// Position of a nonzero entry of minimal absolute value in a[t:, t:].
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0) best = {i, j};
    }
  }
  return best;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rank_bound = std::min(a.rows(), a.cols());
  SnfResult result;
  Integer q;
  std::size_t t = 0;
  for (; t < rank_bound; ++t) {
    while (true) {
      auto pivot = min_pivot(a, t);
      if (!pivot) break;
      swap_rows(a, t, pivot->first);
      swap_cols(a, t, pivot->second);
      const Integer p = a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest; otherwise fold an offending row into row t.
      bool divides_rest = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_rest; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (mpz_divisible_p(a(i, j).get_mpz_t(), p.get_mpz_t()) == 0) {
            for (std::size_t jj = t; jj < a.cols(); ++jj) a(t, jj) += a(i, jj);
            divides_rest = false;
            break;
          }
        }
      }
      if (divides_rest) break;
    }
    if (a(t, t) == 0) break;
    result.invariant_factors.push_back(abs(a(t, t)));
  }
  result.invariant_factors.resize(rank_bound, Integer(0));
  return result;
}

SnfResult snf_of_list(std::span<const Integer> diagonal) { return snf(IntMatrix::diagonal(diagonal)); }

RatMatrix solve_right(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square()) throw std::invalid_argument("solve_right: coefficient matrix is not square");
  if (a.cols() != b.cols()) throw std::invalid_argument("solve_right: shape mismatch");
  const std::size_t k = a.rows();
  const std::size_t t = b.rows();
  // X A = B  <=>  A^t X^t = B^t; reduce [A^t | B^t].
  RatMatrix aug(k, k + t);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(j, i);
    for (std::size_t j = 0; j < t; ++j) aug(i, k + j) = b(j, i);
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && aug(pivot, c) == 0) ++pivot;
    if (pivot == k) throw SingularMatrixError("solve_right: singular coefficient matrix");
    if (pivot != c)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(c, j), aug(pivot, j));
    const Rational inv = 1 / aug(c, c);
    for (std::size_t j = c; j < aug.cols(); ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Rational factor = aug(i, c);
      for (std::size_t j = c; j < aug.cols(); ++j) aug(i, j) -= factor * aug(c, j);
    }
  }
  RatMatrix x(t, k);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < k; ++j) x(i, j) = aug(j, k + i);
  return x;
}

RatMatrix solve_right(const IntMatrix& a, const IntMatrix& b) { return solve_right(to_rational(a), to_rational(b)); }

}  // namespace symchar
