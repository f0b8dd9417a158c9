#pragma once

#include <cstddef>
#include <vector>

#include "symchar/char_table.hpp"
#include "symchar/verdict.hpp"

namespace symchar {

/// The ell-regular and ell-singular blocks of a character table.
///
/// Rows: ell-regular characters (all multiplicities < ell) versus ell-singular ones.
/// Columns: ell-class-regular cycle types (no part divisible by ell) versus the rest.
/// ell need not be prime.
struct RegSingTables {
  int n = 0;
  int ell = 2;
  std::vector<std::size_t> reg_rows, creg_cols, sing_rows, csing_cols;
  IntMatrix x_reg;      // regular characters on regular classes
  IntMatrix x_sing;     // singular characters on singular classes
  IntMatrix xbar_reg;   // all characters on regular classes
  IntMatrix xbar_sing;  // all characters on singular classes
};

// Throws std::invalid_argument if ell < 2, std::logic_error if a block is not square.
RegSingTables regular_singular_tables(const CharTable& table, int ell);

// Largest e with ell^e | x, and whether x == ell^e exactly. x > 0.
struct PowerDecomposition {
  int exponent = 0;
  bool exact = false;
};
PowerDecomposition power_of(const Integer& x, long ell);

Verdict verify_regular_singular(const CharTable& table, int ell);

}  // namespace symchar
