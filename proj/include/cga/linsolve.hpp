#pragma once

// Fraction-free Gauss-Jordan elimination over the Laurent ring Q[c, 1/c].
// Every division performed is exact, so no rational-function field is needed;
// solutions are accepted only when they are Laurent polynomials themselves.

#include <cstddef>
#include <vector>

#include "cga/exact.hpp"

namespace cga {

using Matrix = std::vector<std::vector<CScalar>>;

struct Echelon {
  Matrix reduced;                    // rows: pivot rows first, then zero rows
  std::vector<std::size_t> pivots;   // pivot column of each pivot row
  CScalar determinant;               // common value of every pivot entry
};

/// Fraction-free reduced echelon form over the first `ncols` columns.
Echelon fraction_free_reduce(Matrix m, std::size_t ncols);

/// Rank over Q(c).
std::size_t rank(const Matrix& a);

/// Unique solution of a x = b. Throws NoSolution, NonUniqueSolution (message
/// carries the nullity) or NotLaurent.
std::vector<CScalar> solve_unique(const Matrix& a, const std::vector<CScalar>& b);

/// Fraction-free basis of the null space of a (ncols = number of unknowns).
std::vector<std::vector<CScalar>> kernel(const Matrix& a, std::size_t ncols);

}  // namespace cga
