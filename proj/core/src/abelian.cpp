#include <bihochster/abelian.hpp>

#include <bihochster/errors.hpp>

#include <sstream>
#include <utility>

namespace bihochster {

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (const Int& d : torsion) {
    sep();
    os << "Z/" << d;
  }
  return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  // Merge invariant factors by rediagonalizing the combined torsion part.
  int ta = int(a.torsion.size());
  int tb = int(b.torsion.size());
  IntMatrix diag(ta + tb, ta + tb);
  for (int i = 0; i < ta; ++i) diag.at(i, i) = a.torsion[std::size_t(i)];
  for (int i = 0; i < tb; ++i) diag.at(ta + i, ta + i) = b.torsion[std::size_t(i)];
  SmithDecomposition s = smith_normal_form(diag);
  AbelianGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  for (int i = 0; i < ta + tb; ++i) {
    Int d = s.d.at(i, i);
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

PresentedGroup::PresentedGroup() : PresentedGroup(0, IntMatrix(0, 0)) {}

PresentedGroup::PresentedGroup(int generators)
    : PresentedGroup(generators, IntMatrix(generators, 0)) {}

PresentedGroup::PresentedGroup(int generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_)
    throw InternalError("PresentedGroup: relation rows must equal generator count");
  snf_ = smith_normal_form(relations_);
  for (int i = 0; i < generators_; ++i) {
    Int f = snf_.diagonal(i);
    if (f == 0)
      free_positions_.push_back(i);
    else if (f > 1)
      torsion_positions_.push_back(i);
    // f == 1 marks a generator killed outright; it carries nothing.
  }
  structure_.free_rank = int(free_positions_.size());
  for (int p : torsion_positions_) structure_.torsion.push_back(snf_.diagonal(p));
}

int PresentedGroup::canonical_rank() const {
  return int(torsion_positions_.size() + free_positions_.size());
}

Int PresentedGroup::torsion_order(int i) const {
  if (i < 0 || i >= canonical_rank()) throw InternalError("PresentedGroup: generator index");
  if (i < int(torsion_positions_.size())) return structure_.torsion[std::size_t(i)];
  return 0;
}

IntVec PresentedGroup::canonical_generator(int i) const {
  if (i < 0 || i >= canonical_rank()) throw InternalError("PresentedGroup: generator index");
  int t = int(torsion_positions_.size());
  int pos = i < t ? torsion_positions_[std::size_t(i)] : free_positions_[std::size_t(i - t)];
  return snf_.u_inv.col(pos);
}

IntVec PresentedGroup::reduce(const IntVec& ambient) const {
  if (int(ambient.size()) != generators_)
    throw InternalError("PresentedGroup::reduce: coordinate size mismatch");
  IntVec y = snf_.u * ambient;
  IntVec out(std::size_t(canonical_rank()), Int(0));
  int t = int(torsion_positions_.size());
  for (int i = 0; i < t; ++i) {
    const Int& d = structure_.torsion[std::size_t(i)];
    Int r = y[std::size_t(torsion_positions_[std::size_t(i)])] % d;
    if (r < 0) r += d;
    out[std::size_t(i)] = r;
  }
  for (int i = 0; i < int(free_positions_.size()); ++i)
    out[std::size_t(t + i)] = y[std::size_t(free_positions_[std::size_t(i)])];
  return out;
}

IntVec PresentedGroup::lift(const IntVec& canonical) const {
  if (int(canonical.size()) != canonical_rank())
    throw InternalError("PresentedGroup::lift: coordinate size mismatch");
  IntVec y(std::size_t(generators_), Int(0));
  int t = int(torsion_positions_.size());
  for (int i = 0; i < t; ++i)
    y[std::size_t(torsion_positions_[std::size_t(i)])] = canonical[std::size_t(i)];
  for (int i = 0; i < int(free_positions_.size()); ++i)
    y[std::size_t(free_positions_[std::size_t(i)])] = canonical[std::size_t(t + i)];
  return snf_.u_inv * y;
}

bool PresentedGroup::is_zero(const IntVec& ambient) const {
  for (const Int& c : reduce(ambient))
    if (c != 0) return false;
  return true;
}

PresentedGroup cokernel(const IntMatrix& m) { return PresentedGroup(m.rows(), m); }

PresentedGroup direct_sum(const PresentedGroup& a, const PresentedGroup& b) {
  int g = a.generator_count() + b.generator_count();
  int r = a.relations().cols() + b.relations().cols();
  IntMatrix rel(g, r);
  for (int i = 0; i < a.generator_count(); ++i)
    for (int j = 0; j < a.relations().cols(); ++j) rel.at(i, j) = a.relations().at(i, j);
  for (int i = 0; i < b.generator_count(); ++i)
    for (int j = 0; j < b.relations().cols(); ++j)
      rel.at(a.generator_count() + i, a.relations().cols() + j) = b.relations().at(i, j);
  return PresentedGroup(g, std::move(rel));
}

AbelianGroup subquotient(const PresentedGroup& ambient, const IntMatrix& ker_of,
                         const IntMatrix& ker_target_relations, const IntMatrix& im_of) {
  const int g = ambient.generator_count();
  if (ker_of.cols() != g || im_of.rows() != g || ker_target_relations.rows() != ker_of.rows())
    throw InternalError("subquotient: shape mismatch");

  // ker_of must be well defined modulo the relations on both sides, and the
  // composite ker_of * im_of must vanish in the target. Either failing is a
  // broken differential, not bad input.
  IntegerSolver target(ker_target_relations);
  IntMatrix on_relations = ker_of * ambient.relations();
  if (!target.solve(on_relations))
    throw InternalError("subquotient: map does not preserve relations");
  if (!target.solve(ker_of * im_of))
    throw InternalError("subquotient: composite is nonzero modulo relations");

  // Lattice of ambient coordinate vectors that land in the target relation
  // span: project the kernel of [ker_of | ker_target_relations] onto the
  // first g coordinates and rebase.
  IntMatrix combined = ker_of.hstack(ker_target_relations);
  IntMatrix projected = kernel_basis(combined).top_rows(g);
  IntMatrix lattice = column_lattice_basis(projected);

  // The subquotient is the kernel lattice modulo the image columns and the
  // ambient relations, both of which live inside it by the checks above.
  IntMatrix divisors = im_of.hstack(ambient.relations());
  auto coords = IntegerSolver(lattice).solve(divisors);
  if (!coords) throw InternalError("subquotient: image escapes the kernel lattice");
  return PresentedGroup(lattice.cols(), std::move(*coords)).structure();
}

AbelianGroup kernel_group(const PresentedGroup& ambient, const IntMatrix& map,
                          const IntMatrix& target_relations) {
  return subquotient(ambient, map, target_relations, IntMatrix(ambient.generator_count(), 0));
}

AbelianGroup cokernel_group(const PresentedGroup& ambient, const IntMatrix& image) {
  return subquotient(ambient, IntMatrix(0, ambient.generator_count()), IntMatrix(0, 0), image);
}

}  // namespace bihochster
