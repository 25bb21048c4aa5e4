#include "cga/linsolve.hpp"

#include <stdexcept>
#include <string>

namespace cga {

namespace {

CScalar exact(const CScalar& num, const CScalar& den) {
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("inexact division in fraction-free elimination");
  return *q;
}

}  // namespace

Echelon fraction_free_reduce(Matrix m, std::size_t ncols) {
  Echelon e;
  CScalar prev(1);
  std::size_t r = 0;
  const std::size_t nrows = m.size();
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    // Prefer the sparsest pivot; any nonzero entry keeps the divisions exact.
    std::size_t p = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (m[i][col].is_zero()) continue;
      if (p == nrows || m[i][col].terms().size() < m[p][col].terms().size()) p = i;
    }
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    const CScalar piv = m[r][col];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const CScalar lead = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (j == col) continue;
        CScalar v = piv * m[i][j];
        if (!lead.is_zero()) v -= lead * m[r][j];
        m[i][j] = exact(v, prev);
      }
      m[i][col] = CScalar();
    }
    prev = piv;
    e.pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    if (!(m[i][e.pivots[i]] == prev)) throw std::logic_error("pivot entries diverged in Gauss-Jordan sweep");
  e.reduced = std::move(m);
  e.determinant = prev;
  return e;
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  return fraction_free_reduce(a, a.front().size()).pivots.size();
}

std::vector<CScalar> solve_unique(const Matrix& a, const std::vector<CScalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("row count mismatch in solve_unique");
  const std::size_t n = a.empty() ? 0 : a.front().size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Echelon e = fraction_free_reduce(std::move(aug), n);
  const std::size_t r = e.pivots.size();
  for (std::size_t i = r; i < e.reduced.size(); ++i)
    if (!e.reduced[i][n].is_zero()) throw NoSolution("inconsistent linear system");
  if (r < n)
    throw NonUniqueSolution("solution space has dimension " + std::to_string(n - r));
  std::vector<CScalar> x(n);
  for (std::size_t i = 0; i < r; ++i) {
    auto q = e.reduced[i][n].divide_exact(e.determinant);
    if (!q)
      throw NotLaurent("solution component " + std::to_string(e.pivots[i]) + " = (" +
                       e.reduced[i][n].to_string() + ")/(" + e.determinant.to_string() +
                       ") is not a Laurent polynomial");
    x[e.pivots[i]] = *q;
  }
  return x;
}

std::vector<std::vector<CScalar>> kernel(const Matrix& a, std::size_t ncols) {
  std::vector<std::vector<CScalar>> basis;
  if (a.empty()) {
    for (std::size_t f = 0; f < ncols; ++f) {
      std::vector<CScalar> v(ncols);
      v[f] = CScalar(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const Echelon e = fraction_free_reduce(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<CScalar> v(ncols);
    v[f] = e.determinant;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cga
