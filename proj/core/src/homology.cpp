#include <bihochster/homology.hpp>

#include <algorithm>

namespace bihochster {

ChainBasis::ChainBasis(const SimplicialComplex& k) {
  by_degree_.resize(std::size_t(k.dimension()) + 2);
  for (Face f : k.faces()) {
    auto& bucket = by_degree_[std::size_t(f.cardinality())];
    index_.emplace(f.bits(), int(bucket.size()));
    bucket.push_back(f);  // canonical order is preserved: faces() is sorted
  }
}

int ChainBasis::size(int degree) const {
  int slot = degree + 1;
  if (slot < 0 || slot >= int(by_degree_.size())) return 0;
  return int(by_degree_[std::size_t(slot)].size());
}

const std::vector<Face>& ChainBasis::cells(int degree) const {
  static const std::vector<Face> none;
  int slot = degree + 1;
  if (slot < 0 || slot >= int(by_degree_.size())) return none;
  return by_degree_[std::size_t(slot)];
}

int ChainBasis::index_of(int degree, Face f) const {
  if (f.cardinality() != degree + 1) return -1;
  auto it = index_.find(f.bits());
  return it == index_.end() ? -1 : it->second;
}

IntMatrix boundary_matrix(const ChainBasis& basis, int n) {
  if (n < 0) throw InputError("boundary degree must be nonnegative");
  IntMatrix out(basis.size(n - 1), basis.size(n));
  const auto& cells = basis.cells(n);
  for (int j = 0; j < int(cells.size()); ++j) {
    int sign = 1;
    for (int v : cells[std::size_t(j)].vertices()) {
      int i = basis.index_of(n - 1, cells[std::size_t(j)].without(v));
      if (i < 0) throw InternalError("boundary face missing from basis");
      out.at(i, j) = sign;
      sign = -sign;
    }
  }
  return out;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int n) {
  return boundary_matrix(ChainBasis(k), n);
}

HomologyBasis::HomologyBasis(int top_degree, std::vector<HomologyGroup> groups)
    : groups_(std::move(groups)) {
  if (int(groups_.size()) != top_degree + 2)
    throw InternalError("HomologyBasis: degree range mismatch");
}

const HomologyGroup& HomologyBasis::at(int degree) const {
  static const HomologyGroup zero{};
  int slot = degree + 1;
  if (slot < 0 || slot >= int(groups_.size())) return zero;
  return groups_[std::size_t(slot)];
}

std::vector<int> HomologyBasis::support() const {
  std::vector<int> out;
  for (int n = -1; n <= top_degree(); ++n)
    if (!at(n).group.structure().trivial()) out.push_back(n);
  return out;
}

HomologyBasis reduced_homology(const SimplicialComplex& k) {
  ChainBasis basis(k);
  const int top = basis.top_degree();
  std::vector<HomologyGroup> groups;
  groups.reserve(std::size_t(top) + 2);
  for (int n = -1; n <= top; ++n) {
    // The augmentation makes degree -1 genuine: its cycle lattice is all of
    // C_{-1} and its boundaries are the image of the vertex map.
    IntMatrix cycles = n == -1 ? IntMatrix::identity(basis.size(-1))
                               : kernel_basis(boundary_matrix(basis, n));
    IntMatrix bnd = boundary_matrix(basis, n + 1);
    auto rel = IntegerSolver(cycles).solve(bnd);
    if (!rel) throw InternalError("boundaries escape the cycle lattice");
    PresentedGroup raw(cycles.cols(), std::move(*rel));

    // Re-present on the canonical generators so downstream consumers see one
    // generator per summand, torsion first.
    int rank = raw.canonical_rank();
    int torsion = int(raw.structure().torsion.size());
    IntMatrix diag(rank, torsion);
    std::vector<IntVec> reps;
    reps.reserve(std::size_t(rank));
    for (int i = 0; i < rank; ++i) {
      if (i < torsion) diag.at(i, i) = raw.torsion_order(i);
      reps.push_back(cycles * raw.canonical_generator(i));
    }
    groups.push_back(HomologyGroup{PresentedGroup(rank, std::move(diag)), std::move(reps)});
  }
  return HomologyBasis(top, std::move(groups));
}

IntMatrix induced_map_solved(const ChainBasis& sub_basis, const HomologyGroup& sub_group,
                             const ChainBasis& sup_basis, const HomologyGroup& sup_group,
                             const IntegerSolver& solver, int degree) {
  const int gs = sub_group.group.generator_count();
  const int gt = sup_group.group.generator_count();
  IntMatrix out(gt, gs);
  for (int j = 0; j < gs; ++j) {
    IntVec pushed(std::size_t(sup_basis.size(degree)), Int(0));
    const IntVec& cycle = sub_group.representatives[std::size_t(j)];
    const auto& cells = sub_basis.cells(degree);
    for (int i = 0; i < int(cells.size()); ++i) {
      if (cycle[std::size_t(i)] == 0) continue;
      int ti = sup_basis.index_of(degree, cells[std::size_t(i)]);
      if (ti < 0) throw InternalError("included cell missing upstairs");
      pushed[std::size_t(ti)] = cycle[std::size_t(i)];
    }
    auto sol = solver.solve(pushed);
    if (!sol) throw InternalError("included cycle is not expressible in the target homology");
    IntVec head(sol->begin(), sol->begin() + gt);
    out.set_col(j, sup_group.group.reduce(head));
  }
  return out;
}

IntMatrix induced_map(const SimplicialComplex& sub, const SimplicialComplex& sup, int degree,
                      const HomologyBasis& h_sub, const HomologyBasis& h_sup) {
  if (sub.vertex_count() != sup.vertex_count())
    throw InputError("induced map requires a common ground set");
  for (Face f : sub.faces())
    if (!sup.contains(f)) throw InputError("induced map requires an inclusion of complexes");

  const HomologyGroup& source = h_sub.at(degree);
  const HomologyGroup& target = h_sup.at(degree);
  if (source.group.generator_count() == 0)
    return IntMatrix(target.group.generator_count(), 0);

  ChainBasis bs(sub);
  ChainBasis bt(sup);
  IntMatrix gens(bt.size(degree), target.group.generator_count());
  for (int j = 0; j < gens.cols(); ++j) gens.set_col(j, target.representatives[std::size_t(j)]);
  IntegerSolver solver(gens.hstack(boundary_matrix(bt, degree + 1)));
  return induced_map_solved(bs, source, bt, target, solver, degree);
}

}  // namespace bihochster
