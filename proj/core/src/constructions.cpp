#include "maxdet/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace maxdet {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using Triple = std::array<std::int64_t, 3>;

// All points of PG(2,p) as normalized triples, lexicographically sorted.
std::vector<Triple> projective_points(std::int64_t p) {
  std::vector<Triple> points;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      for (std::int64_t z = 0; z < p; ++z) {
        Triple v{x, y, z};
        if (x == 0 && y == 0 && z == 0) continue;
        std::size_t first = 0;
        while (v[first] == 0) ++first;
        if (v[first] != 1) continue;  // keep only the normalized representative
        points.push_back(v);
      }
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace

IntMatrix s_matrix(std::int64_t n, std::int64_t a, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("s_matrix: n must be >= 1");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < std::size_t(n); ++i) {
    for (std::size_t j = 0; j < std::size_t(n); ++j) {
      m(i, j) = (i == j) ? k : a;
    }
  }
  return m;
}

ZeroOneMatrix projective_plane(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument(
        "projective_plane: unsupported order (only prime orders are built; "
        "prime powers would need extension-field arithmetic)");
  }
  const std::vector<Triple> points = projective_points(p);
  const std::size_t n = points.size();  // p^2 + p + 1
  ZeroOneMatrix m(n, n);
  for (std::size_t line = 0; line < n; ++line) {
    for (std::size_t point = 0; point < n; ++point) {
      std::int64_t dot = 0;
      for (int c = 0; c < 3; ++c) dot += points[line][c] * points[point][c];
      if (dot % p == 0) m.set(line, point, 1);
    }
  }
  return m;
}

ZeroOneMatrix biplane_11() {
  static constexpr std::array<std::int64_t, 5> kDifferenceSet{1, 3, 4, 5, 9};
  ZeroOneMatrix m(11, 11);
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::int64_t d : kDifferenceSet) m.set(i, (i + d) % 11, 1);
  }
  return m;
}

ZeroOneMatrix block_diag_power(const ZeroOneMatrix& a, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("block_diag_power: t must be >= 1");
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("block_diag_power: matrix must be square");
  }
  const std::size_t n = a.rows();
  ZeroOneMatrix m(n * t, n * t);
  for (std::size_t copy = 0; copy < std::size_t(t); ++copy) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (a(r, c)) m.set(copy * n + r, copy * n + c, 1);
      }
    }
  }
  return m;
}

ZeroOneMatrix named_matrix(NamedMatrix id) {
  switch (id) {
    case NamedMatrix::R7_K2:
      return ZeroOneMatrix::from_rows({
          {1, 1, 0, 0, 0, 0, 0},
          {0, 1, 1, 0, 0, 0, 0},
          {1, 0, 1, 0, 0, 0, 0},
          {1, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 1, 1, 0},
          {0, 0, 0, 0, 1, 0, 1},
          {0, 0, 0, 0, 0, 1, 1},
      });
    case NamedMatrix::A10:
      return ZeroOneMatrix::from_rows({
          {0, 1, 0, 0, 0, 0, 0, 1, 1, 0},
          {0, 0, 0, 0, 1, 1, 1, 0, 0, 0},
          {1, 0, 0, 1, 0, 0, 0, 0, 1, 0},
          {0, 0, 1, 0, 0, 0, 0, 1, 0, 1},
          {0, 1, 0, 1, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 1, 1},
          {1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
          {0, 0, 0, 1, 0, 0, 1, 1, 0, 0},
          {1, 0, 1, 0, 0, 0, 1, 0, 0, 0},
          {0, 1, 1, 0, 1, 0, 0, 0, 0, 0},
      });
    case NamedMatrix::B10:
      return ZeroOneMatrix::from_rows({
          {0, 1, 0, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 1, 1, 1, 0, 0},
          {1, 0, 0, 0, 0, 0, 1, 0, 1, 0},
          {0, 1, 0, 0, 1, 0, 0, 1, 0, 0},
          {0, 0, 0, 1, 1, 1, 0, 0, 0, 0},
          {0, 0, 1, 0, 1, 0, 0, 0, 0, 1},
          {1, 0, 1, 0, 0, 0, 0, 1, 0, 0},
          {1, 1, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 1, 0, 0, 0, 0, 1, 1},
          {0, 0, 1, 1, 0, 0, 1, 0, 0, 0},
      });
  }
  throw std::invalid_argument("named_matrix: unknown id");
}

}  // namespace maxdet
