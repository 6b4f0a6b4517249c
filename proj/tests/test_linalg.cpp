#include <doctest.h>

#include <random>

#include "qha/linalg.hpp"

using namespace qha;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

const RationalMatrix kCycleIncidence =
    from_rows({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}});

}  // namespace

TEST_CASE("rref fixed points and normal forms") {
  CHECK(rref(identity(3)).entries == identity(3).entries);
  RationalMatrix m = from_rows({{2, 4}, {1, 2}});
  CHECK(rref(m).entries == from_rows({{1, 2}, {0, 0}}).entries);

  RationalMatrix r = rref(kCycleIncidence);
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(1, 1) == 1);
  for (std::size_t c = 0; c < 3; ++c) CHECK(r.at(2, c) == 0);
}

TEST_CASE("rank") {
  CHECK(rank(RationalMatrix(2, 3)) == 0);
  CHECK(rank(identity(3)) == 3);
  CHECK(rank(kCycleIncidence) == 2);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(identity(2)).empty());
  CHECK(kernel_basis(RationalMatrix(2, 3)).size() == 3);

  auto k = kernel_basis(kCycleIncidence);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == k[0][1]);
  CHECK(k[0][1] == k[0][2]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("rank-nullity, exact kernels, rref idempotence on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    RationalMatrix m(rows, cols);
    for (auto& e : m.entries) e = entry(rng);

    auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == cols);
    for (const auto& v : k) {
      RationalVector mv = mat_vec(m, v);
      for (const auto& x : mv) CHECK(x == 0);
    }
    RationalMatrix r = rref(m);
    CHECK(rref(r).entries == r.entries);
  }
}
