#include "maxdet/matrix.hpp"

#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace maxdet {

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ZeroOneMatrix: dimensions must be >= 1");
  }
}

ZeroOneMatrix ZeroOneMatrix::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  if (rows.size() == 0 || rows.begin()->size() == 0) {
    throw std::invalid_argument("ZeroOneMatrix: dimensions must be >= 1");
  }
  ZeroOneMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols_) {
      throw std::invalid_argument("ZeroOneMatrix: ragged rows");
    }
    std::size_t c = 0;
    for (int v : row) m.set(r, c++, v);
    ++r;
  }
  return m;
}

void ZeroOneMatrix::set(std::size_t r, std::size_t c, int value) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument("ZeroOneMatrix: entries must be 0 or 1");
  }
  entries_[r * cols_ + c] = static_cast<std::uint8_t>(value);
}

std::int64_t ZeroOneMatrix::row_sum(std::size_t r) const {
  std::int64_t s = 0;
  for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c);
  return s;
}

std::int64_t ZeroOneMatrix::col_sum(std::size_t c) const {
  std::int64_t s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

std::int64_t ZeroOneMatrix::total_ones() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

ZeroOneMatrix transpose(const ZeroOneMatrix& a) {
  ZeroOneMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t.set(c, r, a(r, c));
  }
  return t;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("IntMatrix: dimensions must be >= 1");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  if (rows.size() == 0 || rows.begin()->size() == 0) {
    throw std::invalid_argument("IntMatrix: dimensions must be >= 1");
  }
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    std::size_t c = 0;
    for (long long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
  }
}

IntMatrix to_int_matrix(const ZeroOneMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  }
  return m;
}

std::string to_text(const ZeroOneMatrix& a) {
  std::ostringstream out;
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out << ' ';
      out << int(a(r, c));
    }
    out << '\n';
  }
  return out.str();
}

ZeroOneMatrix zero_one_from_text(std::istream& in) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(in >> rows >> cols)) {
    throw std::invalid_argument("matrix text: missing dimension header");
  }
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix text: dimensions must be >= 1");
  }
  ZeroOneMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      int v = 0;
      if (!(in >> v)) throw std::invalid_argument("matrix text: truncated entries");
      m.set(r, c, v);
    }
  }
  return m;
}

ZeroOneMatrix zero_one_from_text(const std::string& text) {
  std::istringstream in(text);
  return zero_one_from_text(in);
}

}  // namespace maxdet
