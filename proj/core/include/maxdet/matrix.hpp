#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxdet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense rectangular matrix with entries in {0,1}, stored row-major as bytes.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix(std::size_t rows, std::size_t cols);
  static ZeroOneMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, int value);

  std::int64_t row_sum(std::size_t r) const;
  std::int64_t col_sum(std::size_t c) const;
  std::int64_t total_ones() const;

  bool operator==(const ZeroOneMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
};

ZeroOneMatrix transpose(const ZeroOneMatrix& a);

/// Square or rectangular matrix of arbitrary-precision signed integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

IntMatrix to_int_matrix(const ZeroOneMatrix& a);

// Matrix text format shared by the CLI and file outputs:
// first line "rows cols", then one line per row of space-separated 0/1 entries.
std::string to_text(const ZeroOneMatrix& a);
ZeroOneMatrix zero_one_from_text(std::istream& in);
ZeroOneMatrix zero_one_from_text(const std::string& text);

}  // namespace maxdet
