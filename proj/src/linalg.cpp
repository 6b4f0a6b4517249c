#include "qha/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace qha {

RationalMatrix rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols && pivot_row < a.rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    Rational inv = 1 / a.at(pivot_row, col);
    for (std::size_t c = col; c < a.cols; ++c) a.at(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == pivot_row || a.at(r, col) == 0) continue;
      Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols; ++c) a.at(r, c) -= f * a.at(pivot_row, c);
    }
    ++pivot_row;
  }
  return a;
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  RationalMatrix r = rref(m);
  std::vector<std::size_t> pivots;
  for (std::size_t row = 0; row < r.rows; ++row) {
    for (std::size_t col = pivots.empty() ? 0 : pivots.back() + 1; col < r.cols; ++col) {
      if (r.at(row, col) != 0) {
        pivots.push_back(col);
        break;
      }
    }
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& m) { return pivot_columns(m).size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = rref(m);
  std::vector<std::size_t> pivots = pivot_columns(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(m.cols, Rational(0));
    v[free_col] = 1;
    // Back-substitute: pivot row i fixes v[pivots[i]].
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
  RationalVector out(m.rows, Rational(0));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

}  // namespace qha
