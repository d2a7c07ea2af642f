#include <bihochster/int_matrix.hpp>

#include <bihochster/errors.hpp>

#include <sstream>
#include <utility>

namespace bihochster {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InternalError("IntMatrix: negative dimension");
  entries_.assign(std::size_t(rows) * std::size_t(cols), Int(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows.begin()->size());
  IntMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != c) throw InternalError("IntMatrix::from_rows: ragged rows");
    int j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InternalError("IntMatrix: product shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Int& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (int(v.size()) != cols_) throw InternalError("IntMatrix: vector shape mismatch");
  IntVec out(std::size_t(rows_), Int(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[std::size_t(j)] != 0) out[std::size_t(i)] += at(i, j) * v[std::size_t(j)];
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw InternalError("IntMatrix::hstack: row mismatch");
  IntMatrix out(rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (cols_ != below.cols_) throw InternalError("IntMatrix::vstack: column mismatch");
  IntMatrix out(rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out = *this;
  for (int i = 0; i < rows_; ++i) out.negate_row(i);
  return out;
}

IntMatrix IntMatrix::top_rows(int count) const {
  if (count < 0 || count > rows_) throw InternalError("IntMatrix::top_rows: bad count");
  IntMatrix out(count, cols_);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  return out;
}

IntVec IntMatrix::col(int j) const {
  IntVec out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[std::size_t(i)] = at(i, j);
  return out;
}

void IntMatrix::set_col(int j, const IntVec& v) {
  if (int(v.size()) != rows_) throw InternalError("IntMatrix::set_col: size mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[std::size_t(i)];
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(int j) {
  for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& factor) {
  if (factor == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) += factor * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& factor) {
  if (factor == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, dst) += factor * at(i, src);
}

std::string IntMatrix::dump() const {
  std::ostringstream os;
  os << rows_ << " x " << cols_ << "\n";
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace bihochster
