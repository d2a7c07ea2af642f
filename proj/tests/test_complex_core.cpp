#include <bihochster/random_complex.hpp>
#include <bihochster/simplicial_complex.hpp>

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace bihochster;

namespace {

SimplicialComplex cycle_with_chord() {
  return from_facets(4, {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3}),
                         Face::of({2, 4}), Face::of({3, 4})});
}

}  // namespace

TEST_CASE("face bit layout and accessors") {
  Face f = Face::of({2, 5, 7});
  CHECK(f.cardinality() == 3);
  CHECK(f.contains(2));
  CHECK(f.contains(5));
  CHECK(f.contains(7));
  CHECK_FALSE(f.contains(1));
  CHECK(f.vertices() == std::vector<int>{2, 5, 7});
  CHECK(f.to_string() == "2,5,7");
  CHECK(Face{}.to_string() == "-");
  CHECK(Face{}.cardinality() == 0);
  CHECK(Face::full(4) == Face::of({1, 2, 3, 4}));
  CHECK(Face::singleton(3) == Face::of({3}));
  CHECK(f.without(5) == Face::of({2, 7}));
  CHECK(f.with(1) == Face::of({1, 2, 5, 7}));
  CHECK(Face::of({1, 2}).subset_of(Face::of({1, 2, 3})));
  CHECK_FALSE(Face::of({1, 4}).subset_of(Face::of({1, 2, 3})));
  CHECK(Face::of({1, 2}).intersect(Face::of({2, 3})) == Face::of({2}));
  CHECK(Face::of({1, 2}).unite(Face::of({2, 3})) == Face::of({1, 2, 3}));
  CHECK(Face::of({1, 2, 3}).minus(Face::of({2})) == Face::of({1, 3}));
}

TEST_CASE("face ordering is by cardinality then bits") {
  std::vector<Face> faces{Face::of({1, 2}), Face::of({3}), Face{}, Face::of({1})};
  std::sort(faces.begin(), faces.end());
  CHECK(faces == std::vector<Face>{Face{}, Face::of({1}), Face::of({3}), Face::of({1, 2})});
}

TEST_CASE("from_facets closes downward and deduplicates") {
  SimplicialComplex k = from_facets(3, {Face::of({1, 2, 3}), Face::of({1, 2})});
  CHECK(k.face_count() == 8);
  CHECK(k.contains(Face{}));
  CHECK(k.contains(Face::of({1, 3})));
  CHECK(k.dimension() == 2);
  CHECK(k == from_facets(3, {Face::of({1, 2, 3})}));
}

TEST_CASE("constructor validates closure and bounds") {
  CHECK_THROWS_AS(SimplicialComplex(3, {Face{}, Face::of({1, 2})}), InputError);
  CHECK_THROWS_AS(SimplicialComplex(3, {Face::of({1})}), InputError);
  CHECK_THROWS_AS(SimplicialComplex(2, {Face{}, Face::of({3})}), InputError);
  CHECK_THROWS_AS(SimplicialComplex(0, {}), InputError);
  CHECK_NOTHROW(SimplicialComplex(2, {Face{}, Face::of({1}), Face::of({2})}));
}

TEST_CASE("empty complex on m vertices is every vertex ghost") {
  SimplicialComplex k(3, {Face{}});
  CHECK(k.dimension() == -1);
  CHECK(ghost_vertices(k) == Face::of({1, 2, 3}));
  CHECK(vertex_support(k) == Face{});
}

TEST_CASE("full subcomplex restricts faces") {
  SimplicialComplex k = cycle_with_chord();
  SimplicialComplex r = full_subcomplex(k, Face::of({1, 2, 3}));
  CHECK(r.vertex_count() == 4);
  CHECK(r.contains(Face::of({1, 2})));
  CHECK(r.contains(Face::of({2, 3})));
  CHECK_FALSE(r.contains(Face::of({2, 4})));
  CHECK_FALSE(r.contains(Face::of({1, 2, 3})));
  CHECK(ghost_vertices(r) == Face::of({4}));

  SimplicialComplex single = full_subcomplex(k, Face::of({2}));
  CHECK(single.face_count() == 2);
}

TEST_CASE("ghost vertices and support partition the ground set") {
  SimplicialComplex k = from_facets(5, {Face::of({1, 2}), Face::of({4})});
  CHECK(ghost_vertices(k) == Face::of({3, 5}));
  CHECK(vertex_support(k) == Face::of({1, 2, 4}));
  CHECK(ghost_vertices(k).unite(vertex_support(k)) == Face::full(5));
}

TEST_CASE("facets are the inclusion-maximal faces") {
  SimplicialComplex k = cycle_with_chord();
  std::vector<Face> fs = facets(k);
  std::vector<Face> expected{Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3}),
                             Face::of({2, 4}), Face::of({3, 4})};
  CHECK(fs == expected);
  CHECK(from_facets(4, fs) == k);
}

TEST_CASE("face sum glues along a common simplex") {
  SimplicialComplex t1 = from_facets(4, {Face::of({1, 2, 3})});
  SimplicialComplex t2 = from_facets(4, {Face::of({2, 3, 4})});
  SimplicialComplex glued = face_sum(t1, t2, Face::of({2, 3}));
  CHECK(glued.contains(Face::of({1, 2, 3})));
  CHECK(glued.contains(Face::of({2, 3, 4})));
  CHECK_FALSE(glued.contains(Face::of({1, 4})));
  CHECK(glued.face_count() == t1.face_count() + t2.face_count() - 4);
}

TEST_CASE("face sum along the empty simplex is disjoint support union") {
  SimplicialComplex a = from_facets(4, {Face::of({1, 2})});
  SimplicialComplex b = from_facets(4, {Face::of({3, 4})});
  SimplicialComplex s = face_sum(a, b, Face{});
  CHECK(s.contains(Face::of({1, 2})));
  CHECK(s.contains(Face::of({3, 4})));
  CHECK_FALSE(s.contains(Face::of({1, 3})));
}

TEST_CASE("face sum rejects bad overlaps") {
  SimplicialComplex t1 = from_facets(4, {Face::of({1, 2, 3})});
  SimplicialComplex t2 = from_facets(4, {Face::of({2, 3, 4})});
  // Overlap beyond sigma.
  CHECK_THROWS_AS(face_sum(t1, t2, Face::of({2})), DecompositionError);
  // Sigma not a face of the second part.
  SimplicialComplex edge = from_facets(4, {Face::of({1, 4})});
  CHECK_THROWS_AS(face_sum(t1, edge, Face::of({2, 3})), DecompositionError);
  // A part that is exactly the simplex on sigma is not a proper extension.
  SimplicialComplex bare = from_facets(4, {Face::of({2, 3})});
  CHECK_THROWS_AS(face_sum(t1, bare, Face::of({2, 3})), DecompositionError);
}

TEST_CASE("union and intersection of complexes") {
  SimplicialComplex t1 = from_facets(4, {Face::of({1, 2, 3})});
  SimplicialComplex t2 = from_facets(4, {Face::of({2, 3, 4})});
  SimplicialComplex u = complex_union(t1, t2);
  SimplicialComplex i = complex_intersection(t1, t2);
  CHECK(u.face_count() == 12);
  CHECK(i.face_count() == 4);
  CHECK(i.contains(Face::of({2, 3})));
  CHECK_FALSE(i.contains(Face::of({1})));
  CHECK(complex_union(u, i) == u);
  CHECK(complex_intersection(u, i) == i);
}

TEST_CASE("fingerprint distinguishes complexes and is stable") {
  SimplicialComplex k = cycle_with_chord();
  CHECK(k.fingerprint() == cycle_with_chord().fingerprint());
  SimplicialComplex other = from_facets(4, {Face::of({1, 2}), Face::of({3, 4})});
  CHECK(k.fingerprint() != other.fingerprint());
  // Ghost vertices change the ground set, so they change the print.
  SimplicialComplex padded = from_facets(5, facets(k));
  CHECK(k.fingerprint() != padded.fingerprint());
}

TEST_CASE("random complex generators are deterministic in the seed") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    SimplicialComplex a = random_complex(5, Density{}, seed);
    SimplicialComplex b = random_complex(5, Density{}, seed);
    CHECK(a == b);
  }
  CHECK(random_complex(5, Density{}, 1) != random_complex(5, Density{}, 2));
}

TEST_CASE("ghost generator always leaves a ghost vertex") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SimplicialComplex k = random_complex_with_ghost(5, Density{}, seed);
    CHECK_FALSE(ghost_vertices(k).empty());
  }
}

TEST_CASE("facet round trip holds on random complexes") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SimplicialComplex k = random_complex(6, Density{2, 5}, seed);
    CHECK(from_facets(6, facets(k)) == k);
  }
}

TEST_CASE("nested restrictions compose by intersection") {
  SeededRng rng(0xc0de);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialComplex k = random_complex(6, Density{2, 5}, rng.next());
    Face j(rng.below(64));
    Face i(rng.below(64));
    CHECK(full_subcomplex(full_subcomplex(k, j), i) ==
          full_subcomplex(k, j.intersect(i)));
  }
}

TEST_CASE("face sum is the union with ghosts off both supports") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    WedgeDecomposition d = random_wedge_decomposable(6, seed);
    CHECK(d.whole == complex_union(d.k1, d.k2));
    CHECK(ghost_vertices(d.whole) ==
          Face::full(6).minus(vertex_support(d.k1).unite(vertex_support(d.k2))));
    for (Face f : d.whole.faces())
      CHECK((d.k1.contains(f) || d.k2.contains(f)));
  }
}

TEST_CASE("density limits pin the generator range") {
  for (std::uint64_t seed : {0ull, 7ull, 31337ull}) {
    CHECK(random_complex(4, Density{1, 1}, seed) == from_facets(4, {Face::full(4)}));
    SimplicialComplex empty = random_complex(3, Density{0, 1}, seed);
    CHECK(empty.faces() == std::vector<Face>{Face()});
    CHECK(ghost_vertices(empty) == Face::full(3));
  }
}

TEST_CASE("density parsing accepts fractions and decimals") {
  CHECK(Density::parse("7/20") == Density{7, 20});
  CHECK(Density::parse("0.35") == Density{35, 100});
  CHECK(Density::parse("1") == Density{1, 1});
  CHECK(Density::parse("0") == Density{0, 1});
  CHECK_THROWS_AS(Density::parse("3/2"), InputError);
  CHECK_THROWS_AS(Density::parse("1/0"), InputError);
  CHECK_THROWS_AS(Density::parse("abc"), InputError);
  CHECK_THROWS_AS(Density::parse(""), InputError);
}
