#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bihochster {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense integer matrix with arbitrary-precision entries, row-major storage.
// Zero-dimensional shapes (0 x n, n x 0) are valid and arise routinely as
// empty boundary or relation matrices; all operations must tolerate them.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return entries_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)]; }
  const Int& at(int i, int j) const {
    return entries_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)];
  }

  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntVec operator*(const IntVec& v) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix hstack(const IntMatrix& right) const;
  IntMatrix vstack(const IntMatrix& below) const;
  IntMatrix negated() const;
  IntMatrix top_rows(int count) const;
  IntVec col(int j) const;
  void set_col(int j, const IntVec& v);

  // Elementary operations used by the Smith reduction.
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int i);
  void negate_col(int j);
  void add_row_multiple(int dst, int src, const Int& factor);  // row dst += factor * row src
  void add_col_multiple(int dst, int src, const Int& factor);  // col dst += factor * col src

  // Plain-text dump for bug reports and failing-test output.
  std::string dump() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  IntVec entries_;
};

}  // namespace bihochster
