#pragma once

#include <random>
#include <vector>

#include "fanolab/lattice.hpp"

namespace fanolab::testing {

// Product of random elementary matrices and a random sign flip; always in GL_n(Z).
inline IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  IntegerMatrix m = IntegerMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    IntegerMatrix e = IntegerMatrix::identity(n);
    e(i, j) = factor(rng);
    m = e * m;
  }
  if (rng() % 2) {
    IntegerMatrix flip = IntegerMatrix::identity(n);
    flip(0, 0) = -1;
    m = flip * m;
  }
  return m;
}

inline LatticeVector random_vector(std::mt19937_64& rng, std::size_t dim, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  if (dim == 2) return {coord(rng), coord(rng)};
  return {coord(rng), coord(rng), coord(rng)};
}

}  // namespace fanolab::testing
