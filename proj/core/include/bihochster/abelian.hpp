#pragma once

#include <bihochster/smith.hpp>

#include <string>
#include <vector>

namespace bihochster {

// Isomorphism type of a finitely generated abelian group: free rank plus
// invariant factors d_1 | d_2 | ... with every d_i >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2 + Z/6", ...
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  static AbelianGroup free(int rank) { return AbelianGroup{rank, {}}; }
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// Z^g modulo the column span of a relation matrix, with deterministic
// canonical coordinates read off the Smith form of the relations. Canonical
// generators are ordered torsion first (ascending invariant factor), then
// free.
class PresentedGroup {
 public:
  PresentedGroup();                         // the trivial group
  explicit PresentedGroup(int generators);  // free of that rank
  PresentedGroup(int generators, IntMatrix relations);

  int generator_count() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }
  const AbelianGroup& structure() const { return structure_; }

  int canonical_rank() const;
  // Order of canonical generator i; 0 for the free ones.
  Int torsion_order(int i) const;
  // Canonical generator i in ambient generator coordinates.
  IntVec canonical_generator(int i) const;
  // Ambient coordinates -> canonical coordinates. Torsion coordinates land
  // in [0, d_i); free ones are unique.
  IntVec reduce(const IntVec& ambient) const;
  // Canonical coordinates -> one ambient representative.
  IntVec lift(const IntVec& canonical) const;
  bool is_zero(const IntVec& ambient) const;

 private:
  int generators_ = 0;
  IntMatrix relations_;
  SmithDecomposition snf_;
  AbelianGroup structure_;
  std::vector<int> torsion_positions_;
  std::vector<int> free_positions_;
};

PresentedGroup cokernel(const IntMatrix& m);
PresentedGroup direct_sum(const PresentedGroup& a, const PresentedGroup& b);

// Structure of kernel / image inside `ambient`: the kernel of
// x -> ker_of * x taken modulo ker_target_relations in the target, divided
// by the span of the columns of im_of together with the ambient relations.
//
// Throws InternalError if ker_of does not kill the ambient relations modulo
// the target relations, or if ker_of * im_of is nonzero modulo them; either
// means the caller handed over maps that are not maps of the groups involved.
AbelianGroup subquotient(const PresentedGroup& ambient, const IntMatrix& ker_of,
                         const IntMatrix& ker_target_relations, const IntMatrix& im_of);

// Kernel of the induced map as a group, nothing divided out.
AbelianGroup kernel_group(const PresentedGroup& ambient, const IntMatrix& map,
                          const IntMatrix& target_relations);

// Ambient modulo the span of the image columns.
AbelianGroup cokernel_group(const PresentedGroup& ambient, const IntMatrix& image);

}  // namespace bihochster
