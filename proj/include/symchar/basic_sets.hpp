#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/char_table.hpp"
#include "symchar/linalg.hpp"
#include "symchar/verdict.hpp"

namespace symchar {

/// A cut alpha in P(n), or the synthetic top element ALL lying above every partition.
///
/// Labels mu < alpha are "small", labels mu >= alpha are "large"; the top cut makes
/// every label small.
struct Cut {
  int n = 0;
  std::optional<Partition> alpha;  // nullopt is ALL

  static Cut top(int n) { return Cut{n, std::nullopt}; }
  static Cut at(Partition alpha);
  // Partition syntax or "ALL"; throws std::invalid_argument unless alpha is a partition of n.
  static Cut parse(std::string_view text, int n);

  bool is_top() const { return !alpha.has_value(); }
  std::string str() const;
  bool is_small(const Partition& mu) const { return is_top() || mu < *alpha; }

  // Number of labels below the cut; labels must be sorted ascending.
  std::size_t small_count(const std::vector<Partition>& labels) const;
};

// Every cut of P(n): each partition in order, then ALL.
std::vector<Cut> all_cuts(int n);

struct SplitReport {
  Cut cut;
  std::size_t small_count = 0;
  IntMatrix x_small;     // small characters on small classes
  IntMatrix x_large;     // large characters on large classes
  IntMatrix xbar_small;  // all characters on small classes
  IntMatrix xbar_large;  // all characters on large classes
};

SplitReport split(const CharTable& table, const Cut& cut);

struct JacobiResult {
  Integer lhs;  // det A_(v) * det A
  Integer rhs;  // sgn(sigma) * delta_(v) * det A^(v)
  int sign = 1;
  bool holds() const { return lhs == rhs; }
};

// Complementary minors of a matrix with A^t A = diag(z). Rows and columns are taken in the
// listed order, complements in ascending order; sigma pairs the i-th chosen row with the
// i-th chosen column. Throws std::invalid_argument if A^t A != diag(z).
JacobiResult jacobi_check(const IntMatrix& a, std::span<const Integer> z, std::span<const std::size_t> rows,
                          std::span<const std::size_t> cols);

struct DecompositionReport {
  std::vector<std::size_t> basis_rows;
  std::optional<RatMatrix> d;  // all rows expanded over the basis rows; absent if the basis block is singular
  RatMatrix d_hat;             // rows of d outside the basis, in ascending row order
  bool is_basic = false;
};

// Tests whether the listed rows of xbar form a Z-basis of the lattice spanned by all rows.
DecompositionReport basic_set_test(const IntMatrix& xbar, std::span<const std::size_t> basis_rows);

// C = D^t D for an integral decomposition matrix; throws std::invalid_argument if not basic.
IntMatrix cartan_matrix(const DecompositionReport& report);

// Decomposition numbers of complementary basic sets satisfy d_ij = -d'_ji and
// C_small = E + D^t D, C_large = E + D D^t.
bool duality_check(const DecompositionReport& small, const DecompositionReport& large);

struct CartanReport {
  DecompositionReport small;
  DecompositionReport large;
  IntMatrix c_small;
  IntMatrix c_large;
  Integer det_small;
  Integer det_large;
  Rational predicted;  // b_(alpha) / a_(alpha)
};

// Throws std::invalid_argument if either side fails to be a basic set.
CartanReport cartan_report(const CharTable& table, const Cut& cut);

// Determinant, Smith form, basic-set and Cartan determinant checks for one cut.
Verdict verify_cut(const CharTable& table, const Cut& cut);

}  // namespace symchar
