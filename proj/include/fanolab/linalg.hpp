#pragma once

// Exact Gaussian elimination over the rationals.

#include <vector>

#include "fanolab/ring.hpp"

namespace fanolab {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix matrix;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

// All rows must have the same length.
RowEchelon reduced_row_echelon(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
// One basis vector per free column, with that column set to 1 and the other
// free columns to 0; ordered by free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t cols);

}  // namespace fanolab
