#include <doctest.h>

#include <random>

#include "maxdet/constructions.hpp"
#include "maxdet/exact.hpp"
#include "oracles.hpp"

using namespace maxdet;
using maxdet::testing::cofactor_det;

TEST_CASE("det_exact basics") {
  CHECK(det_exact(IntMatrix::identity(5)) == 1);
  CHECK(det_exact(IntMatrix::from_rows({{7}})) == 7);
  CHECK(det_exact(IntMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
  // Singular after a zero pivot forces a column scan.
  CHECK(det_exact(IntMatrix::from_rows({{0, 1}, {0, 2}})) == 0);
  CHECK(det_exact(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det_exact of the diagonal-plus-constant matrix") {
  // 4x4, diagonal 3, off-diagonal 1: (1*3+3) * 2^3 = 48.
  CHECK(det_exact(s_matrix(4, 1, 3)) == 48);
  CHECK(cofactor_det(s_matrix(4, 1, 3)) == 48);
}

TEST_CASE("det_exact of the 7x7 reference matrix") {
  const ZeroOneMatrix r7 = named_matrix(NamedMatrix::R7_K2);
  const BigInt d = det_exact(r7);
  CHECK(abs(d) == 4);
  CHECK(d == -4);  // transcribed row order gives the negative orientation
}

TEST_CASE("det_exact agrees with the cofactor oracle on random matrices") {
  std::mt19937 rng(20240817);
  int samples = 0;
  for (int round = 0; round < 250; ++round) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const IntMatrix m = maxdet::testing::random_int_matrix(rng, n, -3, 3);
      CHECK(det_exact(m) == cofactor_det(m));
      ++samples;
    }
  }
  CHECK(samples >= 1000);
}

TEST_CASE("gram matrix") {
  ZeroOneMatrix row(1, 6);
  for (int c = 0; c < 4; ++c) row.set(0, c, 1);
  const IntMatrix g1 = gram(row);
  CHECK(g1.rows() == 1);
  CHECK(g1(0, 0) == 4);

  // Two rows of weight k overlapping in a positions -> [[k,a],[a,k]].
  const ZeroOneMatrix two =
      ZeroOneMatrix::from_rows({{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}});
  const IntMatrix g2 = gram(two);
  CHECK(g2(0, 0) == 3);
  CHECK(g2(1, 1) == 3);
  CHECK(g2(0, 1) == 1);
  CHECK(g2(1, 0) == 1);

  // Any (7,3,1)-design has Gram aJ+(k-a)I with a=1, k=3.
  CHECK(gram(projective_plane(2)) == s_matrix(7, 1, 3));
}

TEST_CASE("gram is symmetric positive semidefinite") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t m = 1 + rng() % 5;
    const std::size_t n = m + rng() % 4;
    const ZeroOneMatrix a = maxdet::testing::random_zero_one(rng, m, n);
    const IntMatrix g = gram(a);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(g(i, i) == a.row_sum(i));
      for (std::size_t j = 0; j < m; ++j) CHECK(g(i, j) == g(j, i));
    }
    for (std::size_t lead = 1; lead <= m; ++lead) {
      IntMatrix sub(lead, lead);
      for (std::size_t i = 0; i < lead; ++i) {
        for (std::size_t j = 0; j < lead; ++j) sub(i, j) = g(i, j);
      }
      CHECK(det_exact(sub) >= 0);
    }
  }
}

TEST_CASE("vol_squared basics") {
  ZeroOneMatrix row(1, 5);
  row.set(0, 1, 1);
  row.set(0, 3, 1);
  row.set(0, 4, 1);
  CHECK(vol_squared(row) == 3);

  const ZeroOneMatrix disjoint =
      ZeroOneMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(vol_squared(disjoint) == 4);  // orthogonal rows: k^2

  CHECK(vol_squared(named_matrix(NamedMatrix::B10)) == 48 * 48);

  ZeroOneMatrix tall(3, 2);
  CHECK_THROWS_AS(vol_squared(tall), std::invalid_argument);
}

TEST_CASE("vol_squared equals det squared for square matrices") {
  std::mt19937 rng(99);
  int samples = 0;
  for (int round = 0; round < 150; ++round) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const ZeroOneMatrix a = maxdet::testing::random_zero_one(rng, n, n);
      const BigInt d = det_exact(a);
      CHECK(vol_squared(a) == d * d);
      ++samples;
    }
  }
  CHECK(samples >= 1000);
}

TEST_CASE("volume splits submultiplicatively over row partitions") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 400; ++round) {
    const std::size_t m = 2 + rng() % 5;
    const std::size_t n = m + rng() % 4;
    const ZeroOneMatrix a = maxdet::testing::random_zero_one(rng, m, n);
    const std::size_t m1 = 1 + rng() % (m - 1);
    ZeroOneMatrix top(m1, n);
    ZeroOneMatrix bottom(m - m1, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < m1) {
          top.set(i, j, a(i, j));
        } else {
          bottom.set(i - m1, j, a(i, j));
        }
      }
    }
    CHECK(vol_squared(a) <= vol_squared(top) * vol_squared(bottom));
  }
}

TEST_CASE("class membership") {
  const ClassFlags r7 = class_membership(named_matrix(NamedMatrix::R7_K2), 2);
  CHECK(r7.in_r);
  CHECK_FALSE(r7.in_s);  // column sums are not all 2
  CHECK(r7.in_t);

  ZeroOneMatrix eye(4, 4);
  for (int i = 0; i < 4; ++i) eye.set(i, i, 1);
  const ClassFlags id = class_membership(eye, 1);
  CHECK(id.in_r);
  CHECK(id.in_s);
  CHECK(id.in_t);

  const ClassFlags a10 = class_membership(named_matrix(NamedMatrix::A10), 3);
  CHECK(a10.in_r);
  CHECK(a10.in_s);
  CHECK(a10.in_t);

  // Rectangular: only the row-sum class applies.
  const ZeroOneMatrix rect = ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
  const ClassFlags rf = class_membership(rect, 2);
  CHECK(rf.in_r);
  CHECK_FALSE(rf.in_s);
  CHECK_FALSE(rf.in_t);

  CHECK_THROWS_AS(class_membership(rect, -1), std::invalid_argument);
}
