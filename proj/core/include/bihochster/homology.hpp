#pragma once

#include <bihochster/abelian.hpp>
#include <bihochster/simplicial_complex.hpp>

#include <unordered_map>
#include <vector>

namespace bihochster {

// Ordered bases of the augmented chain groups of a complex. Degree n holds
// the faces of cardinality n+1 in canonical face order; degree -1 is the
// empty face alone, so reduced homology falls out of the same machinery.
class ChainBasis {
 public:
  explicit ChainBasis(const SimplicialComplex& k);

  int top_degree() const { return int(by_degree_.size()) - 2; }
  int size(int degree) const;
  const std::vector<Face>& cells(int degree) const;
  int index_of(int degree, Face f) const;  // -1 when absent

 private:
  std::vector<std::vector<Face>> by_degree_;  // slot 0 is degree -1
  std::unordered_map<std::uint64_t, int> index_;
};

// Boundary of the degree-n chain group in the bases above. Vertices map to
// the empty face with coefficient +1; in higher degrees removing the i-th
// smallest vertex carries sign (-1)^i.
IntMatrix boundary_matrix(const SimplicialComplex& k, int n);
IntMatrix boundary_matrix(const ChainBasis& basis, int n);

// One reduced homology group in canonical form: the presentation has one
// generator per canonical summand (torsion first, ascending order, then
// free), and representatives holds an explicit integer cycle for each, in
// chain coordinates of the degree it lives in.
struct HomologyGroup {
  PresentedGroup group;
  std::vector<IntVec> representatives;
};

// Reduced homology in all degrees, with representatives. Degrees outside the
// computed range read as the zero group.
class HomologyBasis {
 public:
  HomologyBasis() = default;
  HomologyBasis(int top_degree, std::vector<HomologyGroup> groups);

  const HomologyGroup& at(int degree) const;
  int top_degree() const { return int(groups_.size()) - 2; }
  // Degrees with a nonzero group, ascending.
  std::vector<int> support() const;

 private:
  std::vector<HomologyGroup> groups_;  // slot 0 is degree -1
};

HomologyBasis reduced_homology(const SimplicialComplex& k);

// Matrix of the map induced on reduced homology by the inclusion of sub into
// sup, in canonical generator coordinates at the given degree. Torsion rows
// are normalized to [0, d). Fails with InternalError only if the inputs are
// not the homology of the named complexes.
IntMatrix induced_map(const SimplicialComplex& sub, const SimplicialComplex& sup, int degree,
                      const HomologyBasis& h_sub, const HomologyBasis& h_sup);

// Worker behind induced_map for callers that amortize the solver: `solver`
// must be built on [target representatives | target boundary at degree+1].
IntMatrix induced_map_solved(const ChainBasis& sub_basis, const HomologyGroup& sub_group,
                             const ChainBasis& sup_basis, const HomologyGroup& sup_group,
                             const IntegerSolver& solver, int degree);

}  // namespace bihochster
