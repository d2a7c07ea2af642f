#include <bihochster/smith.hpp>

#include <bihochster/errors.hpp>

#include <algorithm>

namespace bihochster {

int SmithDecomposition::rank() const {
  int n = std::min(d.rows(), d.cols());
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) != 0) ++r;
  return r;
}

Int SmithDecomposition::diagonal(int i) const {
  if (i < 0 || i >= std::min(d.rows(), d.cols())) return 0;
  return d.at(i, i);
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  SmithDecomposition s;
  s.u = IntMatrix::identity(rows);
  s.u_inv = IntMatrix::identity(rows);
  s.v = IntMatrix::identity(cols);
  s.v_inv = IntMatrix::identity(cols);
  s.d = m;
  IntMatrix& d = s.d;

  // Every elementary operation is mirrored on the transform and, inverted, on
  // the cached inverse, keeping u*m*v == d and u*u_inv == id at all times.
  auto row_swap = [&](int a, int b) {
    d.swap_rows(a, b);
    s.u.swap_rows(a, b);
    s.u_inv.swap_cols(a, b);
  };
  auto row_add = [&](int dst, int src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    s.u.add_row_multiple(dst, src, f);
    s.u_inv.add_col_multiple(src, dst, -f);
  };
  auto row_negate = [&](int i) {
    d.negate_row(i);
    s.u.negate_row(i);
    s.u_inv.negate_col(i);
  };
  auto col_swap = [&](int a, int b) {
    d.swap_cols(a, b);
    s.v.swap_cols(a, b);
    s.v_inv.swap_rows(a, b);
  };
  auto col_add = [&](int dst, int src, const Int& f) {
    d.add_col_multiple(dst, src, f);
    s.v.add_col_multiple(dst, src, f);
    s.v_inv.add_row_multiple(src, dst, -f);
  };

  const int n = std::min(rows, cols);
  bool exhausted = false;
  for (int t = 0; t < n && !exhausted; ++t) {
    for (;;) {
      // Pivot choice: smallest absolute value in the remaining block, first
      // in row-major order on ties. This fixes the whole reduction.
      int bi = -1, bj = -1;
      Int best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const Int& e = d.at(i, j);
          if (e == 0) continue;
          Int a = abs(e);
          if (bi < 0 || a < best) {
            best = a;
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) {
        exhausted = true;
        break;
      }
      row_swap(t, bi);
      col_swap(t, bj);

      bool dirty = false;
      for (int i = t + 1; i < rows; ++i)
        if (d.at(i, t) != 0) {
          Int q = d.at(i, t) / d.at(t, t);
          row_add(i, t, -q);
          if (d.at(i, t) != 0) dirty = true;
        }
      for (int j = t + 1; j < cols; ++j)
        if (d.at(t, j) != 0) {
          Int q = d.at(t, j) / d.at(t, t);
          col_add(j, t, -q);
          if (d.at(t, j) != 0) dirty = true;
        }
      // A leftover remainder is strictly smaller than the pivot, so this
      // loop terminates.
      if (dirty) continue;

      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            // Pull the offending row next to the pivot; the next round of
            // clearing shrinks the pivot.
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  for (int t = 0; t < n; ++t)
    if (d.at(t, t) < 0) row_negate(t);
  return s;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  const int cols = m.cols();
  const int r = s.rank();
  IntMatrix out(cols, cols - r);
  for (int j = r; j < cols; ++j)
    for (int i = 0; i < cols; ++i) out.at(i, j - r) = s.v.at(i, j);
  return out;
}

IntMatrix column_lattice_basis(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  const int r = s.rank();
  IntMatrix out(m.rows(), r);
  for (int j = 0; j < r; ++j) {
    Int dj = s.d.at(j, j);
    for (int i = 0; i < m.rows(); ++i) out.at(i, j) = dj * s.u_inv.at(i, j);
  }
  return out;
}

IntegerSolver::IntegerSolver(const IntMatrix& a)
    : s_(smith_normal_form(a)), rows_(a.rows()), cols_(a.cols()) {}

std::optional<IntVec> IntegerSolver::solve(const IntVec& b) const {
  if (int(b.size()) != rows_) throw InternalError("IntegerSolver: rhs size mismatch");
  IntVec c = s_.u * b;
  IntVec y(std::size_t(cols_), Int(0));
  for (int i = 0; i < rows_; ++i) {
    Int di = s_.diagonal(i);
    if (di != 0) {
      if (c[std::size_t(i)] % di != 0) return std::nullopt;
      y[std::size_t(i)] = c[std::size_t(i)] / di;
    } else if (c[std::size_t(i)] != 0) {
      return std::nullopt;
    }
  }
  return s_.v * y;
}

std::optional<IntMatrix> IntegerSolver::solve(const IntMatrix& b) const {
  if (b.rows() != rows_) throw InternalError("IntegerSolver: rhs row mismatch");
  IntMatrix out(cols_, b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto x = solve(b.col(j));
    if (!x) return std::nullopt;
    out.set_col(j, *x);
  }
  return out;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  return IntegerSolver(a).solve(b);
}

}  // namespace bihochster
