#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "symchar/matrix.hpp"
#include "symchar/partition.hpp"

namespace symchar {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest n for which full tables are built (p(26) = 2436 rows).
inline constexpr int kMaxTableOrder = 26;

/// A square table indexed by the partitions of n in ascending order;
/// rows are labelled by characters, columns by conjugacy classes.
struct LabeledTable {
  int n = 0;
  std::vector<Partition> labels;
  IntMatrix values;

  std::size_t size() const { return labels.size(); }
  // Throws std::out_of_range if label is not a partition of n.
  std::size_t index_of(const Partition& label) const;
  const Integer& at(const Partition& row, const Partition& col) const { return values(index_of(row), index_of(col)); }
};

// Irreducible characters: values(lambda, mu) = chi^lambda on cycle type mu.
struct CharTable : LabeledTable {};

// Permutation characters induced from Young subgroups.
struct PermTable : LabeledTable {};

// Murnaghan-Nakayama: strip border strips of length mu_1, mu_2, ... (largest first).
Integer character_value(const Partition& lambda, const Partition& mu);

CharTable build_table(int n);

// Number of ways to distribute the cycles of a permutation of type mu over the
// rows of lambda so that row i receives cycles of total length lambda_i.
Integer permutation_value(const Partition& lambda, const Partition& mu);

// Throws std::logic_error if the result is not lower triangular with diagonal b_mu.
PermTable build_perm_table(int n);

// True iff perm = T * chars for an integral upper unitriangular T.
bool transition_unitriangular_check(const CharTable& chars, const PermTable& perm);

// The diagonal z_mu of X^t X, in label order.
std::vector<Integer> centralizer_orders(const std::vector<Partition>& labels);

}  // namespace symchar
