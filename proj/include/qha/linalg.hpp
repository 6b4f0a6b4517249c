#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace qha {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as they are built through arithmetic;
// use rat(n,d) when constructing from raw integers.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

using RationalVector = std::vector<Rational>;

// Dense row-major matrix of rationals.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;  // rows * cols, row-major

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  bool operator==(const RationalMatrix& o) const = default;
};

// Unique reduced row echelon form; row space is preserved.
RationalMatrix rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of {v : m v = 0}; size is cols - rank(m).
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Column indices of the pivots of rref(m), in increasing order.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v);

}  // namespace qha
