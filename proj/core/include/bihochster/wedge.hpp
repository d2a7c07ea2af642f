#pragma once

#include <bihochster/homology.hpp>
#include <bihochster/simplicial_complex.hpp>

#include <optional>
#include <vector>

namespace bihochster {

// K = K1 cup K2 with K1 cap K2 the full simplex on sigma and both pieces
// proper. `l` is the companion complex generated by the two vertex supports,
// glued along the same sigma.
struct WedgeDecomposition {
  SimplicialComplex k1;
  SimplicialComplex k2;
  Face sigma;
  SimplicialComplex l;
  SimplicialComplex whole;
};

// First decomposition found when scanning sigma over the faces of k in
// canonical order and splitting the facet overlap graph; returns the
// component of the first facet against the rest, so the result is
// deterministic. nullopt when k is not wedge-decomposable.
std::optional<WedgeDecomposition> find_wedge_decomposition(const SimplicialComplex& k);

// Assemble a decomposition from given pieces: validates the face sum and
// fills in the companion complex and the union.
WedgeDecomposition make_wedge_decomposition(const SimplicialComplex& k1,
                                            const SimplicialComplex& k2, Face sigma);

// The companion complex <V(K1)> glued to <V(K2)> along sigma. Requires the
// union to be ghost free; DecompositionError otherwise, and the pieces are
// validated as a face sum first.
SimplicialComplex build_l(const SimplicialComplex& k1, const SimplicialComplex& k2, Face sigma);

// Exactness of 0 -> H(K1_J) + H(K2_J) -> H(K_J) -> H(L_J) -> 0 in reduced
// homology of degree n, tested by exact integer computation.
bool check_ses(const WedgeDecomposition& d, Face j, int n);

struct SesFailure {
  Face j;
  int n;
};

struct SesReport {
  int checked = 0;
  std::vector<SesFailure> failures;
  bool ok() const { return failures.empty(); }
};

// check_ses over every nonempty J and every degree 0 <= n <= m.
SesReport check_ses_all(const WedgeDecomposition& d);

// Reduced Mayer-Vietoris for the pair (a, b) over their union and
// intersection: the composite vanishes, the middle is exact, and the
// connecting isomorphism coker(j_n) == ker(i_{n-1}) holds in every degree.
struct MvDegree {
  int n;
  bool composite_zero;
  bool middle_exact;
  bool connecting_iso;
  bool ok() const { return composite_zero && middle_exact && connecting_iso; }
};

struct MvReport {
  std::vector<MvDegree> degrees;  // n descending, one past top down to -1
  bool ok() const;
};

MvReport mayer_vietoris_report(const SimplicialComplex& a, const SimplicialComplex& b);
bool mayer_vietoris_verify(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace bihochster
