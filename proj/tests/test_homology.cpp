#include <bihochster/homology.hpp>
#include <bihochster/random_complex.hpp>
#include <bihochster/simplicial_complex.hpp>
#include <bihochster/smith.hpp>

#include <doctest.h>

#include <vector>

using namespace bihochster;

namespace {

SimplicialComplex sphere_boundary(int m) {
  std::vector<Face> gens;
  Face full = Face::full(m);
  for (int v = 1; v <= m; ++v) gens.push_back(full.without(v));
  return from_facets(m, gens);
}

// Triangulation of the real projective plane on six vertices.
SimplicialComplex projective_plane() {
  return from_facets(6, {Face::of({1, 2, 5}), Face::of({1, 2, 6}), Face::of({1, 3, 4}),
                         Face::of({1, 3, 6}), Face::of({1, 4, 5}), Face::of({2, 3, 4}),
                         Face::of({2, 3, 5}), Face::of({2, 4, 6}), Face::of({3, 5, 6}),
                         Face::of({4, 5, 6})});
}

AbelianGroup homology_at(const SimplicialComplex& k, int degree) {
  return reduced_homology(k).at(degree).group.structure();
}

}  // namespace

TEST_CASE("chain basis enumerates cells by degree") {
  SimplicialComplex k = from_facets(3, {Face::of({1, 2, 3})});
  ChainBasis basis(k);
  CHECK(basis.top_degree() == 2);
  CHECK(basis.size(-1) == 1);
  CHECK(basis.size(0) == 3);
  CHECK(basis.size(1) == 3);
  CHECK(basis.size(2) == 1);
  CHECK(basis.size(3) == 0);
  CHECK(basis.index_of(1, Face::of({1, 3})) == 1);
  CHECK(basis.index_of(1, Face::of({1, 2, 3})) == -1);
  CHECK(basis.cells(0) == std::vector<Face>{Face::of({1}), Face::of({2}), Face::of({3})});
}

TEST_CASE("boundary composed with boundary vanishes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SimplicialComplex k = random_complex(5, Density{1, 2}, seed);
    ChainBasis basis(k);
    for (int n = 0; n <= basis.top_degree(); ++n) {
      IntMatrix dn = boundary_matrix(basis, n);
      IntMatrix dn1 = boundary_matrix(basis, n + 1);
      CHECK((dn * dn1).is_zero());
    }
  }
}

TEST_CASE("boundary signs alternate over vertex removal") {
  SimplicialComplex k = from_facets(3, {Face::of({1, 2, 3})});
  ChainBasis basis(k);
  IntMatrix d2 = boundary_matrix(basis, 2);
  // Faces of 123 in basis order 12, 13, 23 with signs +, -, +.
  CHECK(d2.at(0, 0) == 1);
  CHECK(d2.at(1, 0) == -1);
  CHECK(d2.at(2, 0) == 1);
  IntMatrix d0 = boundary_matrix(basis, 0);
  // Every vertex hits the empty cell positively.
  for (int j = 0; j < 3; ++j) CHECK(d0.at(0, j) == 1);
}

TEST_CASE("point and simplex are acyclic") {
  SimplicialComplex pt(1, {Face{}, Face::of({1})});
  CHECK(reduced_homology(pt).support().empty());
  SimplicialComplex simplex = from_facets(5, {Face::full(5)});
  CHECK(reduced_homology(simplex).support().empty());
}

TEST_CASE("homology of the empty complex is a single class below degree zero") {
  SimplicialComplex empty(2, {Face{}});
  HomologyBasis h = reduced_homology(empty);
  CHECK(h.at(-1).group.structure() == AbelianGroup::free(1));
  CHECK(h.support() == std::vector<int>{-1});
}

TEST_CASE("spheres have one class in the top degree") {
  for (int m = 3; m <= 6; ++m) {
    SimplicialComplex s = sphere_boundary(m);
    HomologyBasis h = reduced_homology(s);
    CHECK(h.support() == std::vector<int>{m - 2});
    CHECK(h.at(m - 2).group.structure() == AbelianGroup::free(1));
  }
}

TEST_CASE("disjoint points count components") {
  SimplicialComplex k = from_facets(4, {Face::of({1}), Face::of({2}), Face::of({3}),
                                        Face::of({4})});
  CHECK(homology_at(k, 0) == AbelianGroup::free(3));
}

TEST_CASE("circle from a hollow triangle") {
  SimplicialComplex c = from_facets(3, {Face::of({1, 2}), Face::of({1, 3}),
                                        Face::of({2, 3})});
  CHECK(homology_at(c, 0).trivial());
  CHECK(homology_at(c, 1) == AbelianGroup::free(1));
}

TEST_CASE("projective plane carries two-torsion") {
  SimplicialComplex p = projective_plane();
  HomologyBasis h = reduced_homology(p);
  CHECK(h.at(0).group.structure().trivial());
  CHECK(h.at(1).group.structure() == AbelianGroup{0, {Int(2)}});
  CHECK(h.at(2).group.structure().trivial());
  CHECK(h.support() == std::vector<int>{1});
}

TEST_CASE("ranks satisfy the Euler characteristic identity") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SimplicialComplex k = random_complex(6, Density{2, 5}, seed);
    ChainBasis basis(k);
    HomologyBasis h = reduced_homology(k);
    long long cells = 0, ranks = 0;
    for (int n = -1; n <= basis.top_degree(); ++n) {
      long long sign = (n % 2 == 0) ? 1 : -1;
      cells += sign * basis.size(n);
      ranks += sign * h.at(n).group.structure().free_rank;
    }
    CHECK(cells == ranks);
  }
}

TEST_CASE("homology representatives are genuine cycles presented canonically") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SimplicialComplex k = random_complex(5, Density{1, 2}, seed);
    ChainBasis basis(k);
    HomologyBasis h = reduced_homology(k);
    for (int n : h.support()) {
      const HomologyGroup& g = h.at(n);
      IntMatrix dn = boundary_matrix(basis, n);
      CHECK(int(g.representatives.size()) == g.group.canonical_rank());
      for (const IntVec& rep : g.representatives) {
        IntVec img = dn * rep;
        for (const Int& e : img) CHECK(e == 0);
      }
      // Canonical presentation: reduce of the i-th canonical generator is e_i.
      for (int i = 0; i < g.group.canonical_rank(); ++i) {
        IntVec e(std::size_t(g.group.canonical_rank()), Int(0));
        e[std::size_t(i)] = 1;
        CHECK(g.group.reduce(g.group.canonical_generator(i)) == e);
      }
    }
  }
}

TEST_CASE("cones are acyclic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SimplicialComplex k = random_complex(5, Density{2, 5}, seed);
    // Cone with apex 6: every facet gains the fresh vertex.
    std::vector<Face> gens;
    for (Face f : facets(k)) gens.push_back(f.with(6));
    if (gens.empty()) gens.push_back(Face::singleton(6));
    SimplicialComplex cone = from_facets(6, gens);
    CHECK(reduced_homology(cone).support().empty());
  }
}

TEST_CASE("induced map of an identity inclusion is the identity") {
  SimplicialComplex k = from_facets(3, {Face::of({1, 2}), Face::of({1, 3}),
                                        Face::of({2, 3})});
  HomologyBasis h = reduced_homology(k);
  IntMatrix m = induced_map(k, k, 1, h, h);
  CHECK(m == IntMatrix::identity(1));
}

TEST_CASE("induced map kills classes that bound in the larger complex") {
  SimplicialComplex hollow = from_facets(3, {Face::of({1, 2}), Face::of({1, 3}),
                                             Face::of({2, 3})});
  SimplicialComplex filled = from_facets(3, {Face::of({1, 2, 3})});
  HomologyBasis hsub = reduced_homology(hollow);
  HomologyBasis hsup = reduced_homology(filled);
  IntMatrix m = induced_map(hollow, filled, 1, hsub, hsup);
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 1);
}

TEST_CASE("induced maps compose along nested subcomplexes") {
  // Two hollow triangles sharing edge 23 inside the union; inclusion of one
  // triangle factors through the subcomplex missing edge 14.
  SimplicialComplex small = from_facets(4, {Face::of({1, 2}), Face::of({1, 3}),
                                            Face::of({2, 3})});
  SimplicialComplex mid = from_facets(4, {Face::of({1, 2}), Face::of({1, 3}),
                                          Face::of({2, 3}), Face::of({2, 4}),
                                          Face::of({3, 4})});
  SimplicialComplex big = from_facets(4, {Face::of({1, 2}), Face::of({1, 3}),
                                          Face::of({2, 3}), Face::of({2, 4}),
                                          Face::of({3, 4}), Face::of({1, 4})});
  HomologyBasis hs = reduced_homology(small);
  HomologyBasis hm = reduced_homology(mid);
  HomologyBasis hb = reduced_homology(big);
  IntMatrix sm = induced_map(small, mid, 1, hs, hm);
  IntMatrix mb = induced_map(mid, big, 1, hm, hb);
  IntMatrix sb = induced_map(small, big, 1, hs, hb);
  IntMatrix composed = mb * sm;
  REQUIRE(composed.rows() == sb.rows());
  REQUIRE(composed.cols() == sb.cols());
  for (int j = 0; j < sb.cols(); ++j)
    CHECK(hb.at(1).group.reduce(composed.col(j)) == hb.at(1).group.reduce(sb.col(j)));
}

TEST_CASE("induced map validates its arguments") {
  SimplicialComplex k = from_facets(3, {Face::of({1, 2, 3})});
  SimplicialComplex other = from_facets(4, {Face::of({1, 2, 3})});
  SimplicialComplex hollow = from_facets(3, {Face::of({1, 2}), Face::of({1, 3}),
                                             Face::of({2, 3})});
  HomologyBasis hk = reduced_homology(k);
  HomologyBasis ho = reduced_homology(other);
  HomologyBasis hh = reduced_homology(hollow);
  CHECK_THROWS_AS(induced_map(k, other, 1, hk, ho), InputError);
  CHECK_THROWS_AS(induced_map(k, hollow, 1, hk, hh), InputError);
}

TEST_CASE("boundary matrix rejects negative degrees") {
  SimplicialComplex k = from_facets(2, {Face::of({1, 2})});
  CHECK_THROWS_AS(boundary_matrix(k, -1), InputError);
}
