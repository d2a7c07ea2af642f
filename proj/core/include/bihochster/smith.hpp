#pragma once

#include <bihochster/int_matrix.hpp>

#include <optional>
#include <vector>

namespace bihochster {

// u * input * v == d with d diagonal, nonnegative, each diagonal entry
// dividing the next. u and v are unimodular; their inverses are maintained
// alongside so kernels, image lattices and cokernel coordinates can be read
// off without a separate inversion step.
//
// The reduction is deterministic: the pivot is always the entry of smallest
// absolute value in the remaining block, first in row-major order on ties.
struct SmithDecomposition {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;

  int rank() const;
  Int diagonal(int i) const;  // 0 beyond min(rows, cols)
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Columns form a basis of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Columns form a basis of the lattice spanned by the columns of m.
IntMatrix column_lattice_basis(const IntMatrix& m);

// Exact solver for a x = b over the integers; the Smith form of a is computed
// once and reused across right-hand sides. Solutions are deterministic.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& a);

  std::optional<IntVec> solve(const IntVec& b) const;
  // Column-wise solve; nullopt if any column has no integer solution.
  std::optional<IntMatrix> solve(const IntMatrix& b) const;

  const SmithDecomposition& decomposition() const { return s_; }

 private:
  SmithDecomposition s_;
  int rows_ = 0;
  int cols_ = 0;
};

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

}  // namespace bihochster
