#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/char_table.hpp"
#include "symchar/verdict.hpp"

namespace symchar {

inline constexpr int kKTableFormatVersion = 1;

/// Transition table between k-Schur functions and power sums over the
/// k-bounded partitions of n: values(lambda, nu) is the coefficient of the
/// k-Schur function for lambda in the power sum for nu.
struct KTable {
  int n = 0;
  int k = 0;
  std::vector<Partition> labels;  // k-bounded partitions of n, ascending
  IntMatrix values;
};

// Defined by (X^(k))^t * dual = diag(z_lambda).
struct KDualTable {
  int n = 0;
  int k = 0;
  std::vector<Partition> labels;
  RatMatrix values;
  bool integral = false;
};

enum class KTableErrorKind { Io, Parse, LabelMismatch, NotSquare, SizeMismatch };

class KTableError : public std::runtime_error {
 public:
  KTableError(KTableErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  KTableErrorKind kind() const { return kind_; }

 private:
  KTableErrorKind kind_;
};

std::vector<Partition> k_bounded_partitions(int n, int k);

// JSON document: format_version, n, k, labels (partition strings), rows (decimal strings).
std::string to_json(const KTable& table);
KTable parse_ktable(std::string_view text);
KTable load_ktable(const std::filesystem::path& path);
void save_ktable(const KTable& table, const std::filesystem::path& path);

// For k >= n every partition is k-bounded and the table is the character table.
// Throws std::invalid_argument for k < n.
KTable make_trivial_fixture(int n, int k);

// Throws SingularMatrixError for a singular table.
KDualTable dual(const KTable& table);

// Unitriangular transition to the restricted character table and the determinant formulas,
// globally and for every principal block below a k-bounded cut.
Verdict verify_transition_theorem(const KTable& table, const CharTable& chars);
Verdict verify_transition_theorem(const KTable& table);

// Proved: determinant of the dual table and the duality product.
// Observed: integrality and Smith forms of the dual table and its lower principal blocks.
Verdict verify_dual_observations(const KTable& table);

}  // namespace symchar
