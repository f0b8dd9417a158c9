#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symchar/matrix.hpp"

namespace symchar {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Fraction-free (Bareiss) elimination. det of the 0x0 matrix is 1.
Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

struct SnfResult {
  // d_1 | d_2 | ... , nonnegative, zeros only at the end. One entry per min(rows, cols).
  std::vector<Integer> invariant_factors;

  std::string str() const;
  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

SnfResult snf(const IntMatrix& m);
SnfResult snf_of_list(std::span<const Integer> diagonal);

// Solves X * A = B for X. A must be square and nonsingular with A.cols() == B.cols().
RatMatrix solve_right(const IntMatrix& a, const IntMatrix& b);
RatMatrix solve_right(const RatMatrix& a, const RatMatrix& b);

bool is_integral(const RatMatrix& m);

template <typename T>
bool is_lower_unitriangular(const Matrix<T>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  }
  return true;
}

template <typename T>
bool is_upper_unitriangular(const Matrix<T>& m) {
  return is_lower_unitriangular(m.transpose());
}

struct StructureFlags {
  bool is_integral = false;
  // nullopt for non-square input.
  std::optional<bool> is_lower_unitriangular;
  std::optional<bool> is_upper_unitriangular;
};

StructureFlags structure_checks(const RatMatrix& m);

}  // namespace symchar
