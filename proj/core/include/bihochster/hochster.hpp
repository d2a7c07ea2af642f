#pragma once

#include <bihochster/homology.hpp>

#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace bihochster {

// Sparse bigraded table of groups. The pair (k, l) stands for the bidegree
// (-k, 2l); only nonzero groups are stored. Valid slots satisfy
// 0 <= k <= l <= m. Rows iterate with l ascending, then k.
class BigradedTable {
 public:
  enum class Kind { Homology, DoubleHomology };

  BigradedTable(Kind kind, int m);

  Kind kind() const { return kind_; }
  int vertex_count() const { return m_; }

  void set(int k, int l, AbelianGroup g);         // replaces; drops trivial groups
  void add(int k, int l, const AbelianGroup& g);  // direct-sums into the slot
  const AbelianGroup* find(int k, int l) const;   // nullptr when the slot is zero
  std::vector<std::tuple<int, int, AbelianGroup>> rows() const;
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const BigradedTable&, const BigradedTable&) = default;

 private:
  Kind kind_;
  int m_;
  std::map<std::pair<int, int>, AbelianGroup> entries_;  // keyed (l, k)
};

// Reduced homology of every full subcomplex K_J, all 2^m subsets computed up
// front (optionally in parallel), plus lazily cached induced maps of the
// one-vertex inclusions K_J -> K_{J+x}. The lazy half is not thread safe.
class SubcomplexHomology {
 public:
  explicit SubcomplexHomology(const SimplicialComplex& k, int jobs = 1);

  SubcomplexHomology(const SubcomplexHomology&) = delete;
  SubcomplexHomology& operator=(const SubcomplexHomology&) = delete;

  const SimplicialComplex& complex() const { return k_; }
  const SimplicialComplex& subcomplex(Face j) const;
  const ChainBasis& chain_basis(Face j) const;
  const HomologyBasis& homology(Face j) const;

  // Induced map of K_J -> K_{J+x} on homology at the given degree, in
  // canonical generator coordinates. x must not lie in j.
  const IntMatrix& induced(Face j, int x, int degree);

 private:
  struct Entry {
    SimplicialComplex complex;
    ChainBasis basis;
    HomologyBasis homology;
  };
  const Entry& entry(Face j) const;
  const IntegerSolver& solver(Face target, int degree);

  SimplicialComplex k_;
  std::vector<std::unique_ptr<Entry>> entries_;
  std::map<std::pair<std::uint64_t, int>, IntegerSolver> solvers_;
  std::map<std::tuple<std::uint64_t, int, int>, IntMatrix> induced_;
};

// One horizontal row of the double complex after taking homology: level l
// collects the degree n-1 reduced homology of the K_J with |J| = l, and the
// differential raises l by one vertex at a time with alternating signs.
struct ChSummand {
  Face subset;
  int offset;  // first generator index inside the assembled level
};

struct ChLevel {
  std::vector<ChSummand> summands;
  PresentedGroup group;
  IntMatrix differential;  // into level l+1, generator coordinates
};

struct CochainComplexCH {
  int n = 0;
  int m = 0;
  std::vector<ChLevel> levels;  // indexed by l = 0..m
};

CochainComplexCH build_ch_complex(SubcomplexHomology& cache, int n);

// Differential out of level l of the n-th row, built from a fresh cache.
IntMatrix ch_differential(const SimplicialComplex& k, int n, int l);

// d*d == 0 modulo the level relations; InternalError otherwise. Runs inside
// double_homology on every row, and is exposed for direct checking.
void verify_ch_squares_to_zero(const CochainComplexCH& ch);

// All bigraded reduced homology of the moment-angle complex over Z, obtained
// as the direct sum over |J| = l of the reduced homology of K_J.
BigradedTable hochster_table(const SimplicialComplex& k, int jobs = 1);

// Bigraded double homology: cohomology of the rows above.
BigradedTable double_homology(const SimplicialComplex& k, int jobs = 1);

}  // namespace bihochster
