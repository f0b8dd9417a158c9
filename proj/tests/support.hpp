#pragma once

#include <doctest.h>

#include "oracles.hpp"
#include "symchar/matrix.hpp"
#include "symchar/partition.hpp"

namespace support {

inline symchar::IntMatrix to_matrix(const oracle::Grid& g) {
  symchar::IntMatrix m(g.size(), g.empty() ? 0 : g[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = g[i][j];
  return m;
}

inline oracle::Grid to_grid(const symchar::IntMatrix& m) {
  oracle::Grid g(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

inline symchar::Partition P(const char* text) { return symchar::Partition::parse(text); }

}  // namespace support
