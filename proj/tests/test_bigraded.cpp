#include <bihochster/hochster.hpp>
#include <bihochster/random_complex.hpp>
#include <bihochster/simplicial_complex.hpp>
#include <bihochster/smith.hpp>

#include <doctest.h>

#include <map>
#include <vector>

using namespace bihochster;

namespace {

SimplicialComplex cycle_with_chord() {
  return from_facets(4, {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3}),
                         Face::of({2, 4}), Face::of({3, 4})});
}

SimplicialComplex sphere_boundary(int m) {
  std::vector<Face> gens;
  Face full = Face::full(m);
  for (int v = 1; v <= m; ++v) gens.push_back(full.without(v));
  return from_facets(m, gens);
}

using TableRows = std::vector<std::tuple<int, int, AbelianGroup>>;

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& image) {
  std::vector<Face> gens;
  for (Face f : facets(k)) {
    Face g;
    for (int v : f.vertices()) g = g.with(image[std::size_t(v - 1)]);
    gens.push_back(g);
  }
  return from_facets(k.vertex_count(), gens);
}

}  // namespace

TEST_CASE("bigraded table stores by bidegree and folds repeats") {
  BigradedTable t(BigradedTable::Kind::Homology, 4);
  CHECK(t.empty());
  t.set(0, 0, AbelianGroup::free(1));
  t.add(1, 3, AbelianGroup::free(1));
  t.add(1, 3, AbelianGroup{0, {Int(2)}});
  CHECK(t.rows() == TableRows{{0, 0, AbelianGroup::free(1)},
                              {1, 3, AbelianGroup{1, {Int(2)}}}});
  CHECK(t.find(1, 3) != nullptr);
  CHECK(t.find(2, 3) == nullptr);
  t.set(1, 3, AbelianGroup{});
  CHECK(t.find(1, 3) == nullptr);
  CHECK_THROWS_AS(t.set(3, 2, AbelianGroup::free(1)), InternalError);
  CHECK_THROWS_AS(t.set(0, 9, AbelianGroup::free(1)), InternalError);
}

TEST_CASE("bigraded rows iterate by weight then degree") {
  BigradedTable t(BigradedTable::Kind::Homology, 5);
  t.set(2, 4, AbelianGroup::free(1));
  t.set(0, 0, AbelianGroup::free(1));
  t.set(1, 4, AbelianGroup::free(2));
  t.set(1, 2, AbelianGroup::free(1));
  TableRows rows = t.rows();
  REQUIRE(rows.size() == 4);
  CHECK(std::get<1>(rows[0]) == 0);
  CHECK(std::get<1>(rows[1]) == 2);
  CHECK(std::get<0>(rows[2]) == 1);
  CHECK(std::get<0>(rows[3]) == 2);
}

TEST_CASE("subcomplex sweep memoizes every restriction") {
  SimplicialComplex k = cycle_with_chord();
  SubcomplexHomology cache(k);
  CHECK(cache.complex() == k);
  Face j = Face::of({1, 2, 3});
  CHECK(cache.subcomplex(j) == full_subcomplex(k, j));
  CHECK(cache.homology(j).at(1).group.structure() == AbelianGroup::free(1));
  CHECK(cache.homology(Face::full(4)).at(1).group.structure() == AbelianGroup::free(2));
  CHECK(cache.homology(Face{}).at(-1).group.structure() == AbelianGroup::free(1));
}

TEST_CASE("hochster table of the chorded square") {
  BigradedTable t = hochster_table(cycle_with_chord());
  CHECK(t.rows() == TableRows{{0, 0, AbelianGroup::free(1)},
                              {1, 2, AbelianGroup::free(1)},
                              {1, 3, AbelianGroup::free(2)},
                              {2, 4, AbelianGroup::free(2)}});
}

TEST_CASE("double homology of the chorded square") {
  BigradedTable t = double_homology(cycle_with_chord());
  CHECK(t.rows() == TableRows{{0, 0, AbelianGroup::free(1)},
                              {1, 2, AbelianGroup::free(1)}});
}

TEST_CASE("chorded square differential in the interesting row") {
  SimplicialComplex k = cycle_with_chord();
  SubcomplexHomology cache(k);
  CochainComplexCH ch = build_ch_complex(cache, 2);
  const ChLevel& level3 = ch.levels[3];
  REQUIRE(level3.summands.size() == 2);
  CHECK(level3.summands[0].subset == Face::of({1, 2, 3}));
  CHECK(level3.summands[1].subset == Face::of({2, 3, 4}));
  // Frozen output of the reduction pipeline; the basis-independent content is
  // checked right after.
  CHECK(level3.differential == IntMatrix::from_rows({{-1, 1}, {0, 1}}));
  SmithDecomposition s = smith_normal_form(level3.differential);
  CHECK(s.rank() == 2);
  CHECK(s.diagonal(0) == 1);
  CHECK(s.diagonal(1) == 1);
  // Injective with unimodular image, so the row dies at weights 3 and 4.
  CHECK(ch.levels[4].group.generator_count() == 2);
  CHECK(ch.levels[2].group.generator_count() == 0);
}

TEST_CASE("ch differential squares to zero on random complexes") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SimplicialComplex k = random_complex(5, Density{2, 5}, seed);
    SubcomplexHomology cache(k);
    for (int n = 0; n <= k.vertex_count(); ++n) {
      CochainComplexCH ch = build_ch_complex(cache, n);
      CHECK_NOTHROW(verify_ch_squares_to_zero(ch));
    }
  }
}

TEST_CASE("ch differential rejects weights outside the ground set") {
  SimplicialComplex k = cycle_with_chord();
  CHECK_THROWS_AS(ch_differential(k, 0, -1), InputError);
  CHECK_THROWS_AS(ch_differential(k, 0, 5), InputError);
}

TEST_CASE("row ranks are preserved from hochster to the ch complex") {
  // In a fixed row the alternating sum of free ranks survives taking
  // cohomology, and torsion splits off unchanged in total.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    SimplicialComplex k = random_complex(5, Density{2, 5}, seed);
    BigradedTable h = hochster_table(k);
    BigradedTable hh = double_homology(k);
    std::map<int, long long> euler_h, euler_hh;
    for (auto& [kk, l, g] : h.rows())
      euler_h[l - kk] += ((l % 2 == 0) ? 1 : -1) * g.free_rank;
    for (auto& [kk, l, g] : hh.rows())
      euler_hh[l - kk] += ((l % 2 == 0) ? 1 : -1) * g.free_rank;
    std::erase_if(euler_h, [](const auto& e) { return e.second == 0; });
    std::erase_if(euler_hh, [](const auto& e) { return e.second == 0; });
    CHECK(euler_h == euler_hh);
  }
}

TEST_CASE("levels assemble exactly the per subset homology") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SimplicialComplex k = random_complex(5, Density{2, 5}, seed);
    SubcomplexHomology cache(k);
    for (int n = 0; n <= 5; ++n) {
      CochainComplexCH ch = build_ch_complex(cache, n);
      std::vector<long long> expected(std::size_t(6), 0);
      for (std::uint64_t bits = 0; bits < 32; ++bits) {
        Face j(bits);
        expected[std::size_t(j.cardinality())] +=
            cache.homology(j).at(n - 1).group.canonical_rank();
      }
      for (int l = 0; l <= 5; ++l)
        CHECK(ch.levels[std::size_t(l)].group.generator_count() ==
              expected[std::size_t(l)]);
    }
  }
}

TEST_CASE("full simplex concentrates in the corner") {
  SimplicialComplex simplex = from_facets(5, {Face::full(5)});
  BigradedTable h = hochster_table(simplex);
  BigradedTable hh = double_homology(simplex);
  CHECK(h.rows() == TableRows{{0, 0, AbelianGroup::free(1)}});
  CHECK(hh.rows() == TableRows{{0, 0, AbelianGroup::free(1)}});
}

TEST_CASE("sphere boundaries give the bigraded shape of an odd sphere") {
  for (int m = 3; m <= 5; ++m) {
    BigradedTable h = hochster_table(sphere_boundary(m));
    CHECK(h.rows() == TableRows{{0, 0, AbelianGroup::free(1)},
                                {1, m, AbelianGroup::free(1)}});
    BigradedTable hh = double_homology(sphere_boundary(m));
    CHECK(hh.rows() == h.rows());
  }
}

TEST_CASE("ghost vertices kill double homology") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SimplicialComplex k = random_complex_with_ghost(5, Density{2, 5}, seed);
    CHECK(double_homology(k).empty());
  }
}

TEST_CASE("weight zero entry detects ghost freeness") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SimplicialComplex k = random_complex(5, Density{2, 5}, seed);
    BigradedTable hh = double_homology(k);
    const AbelianGroup* corner = hh.find(0, 0);
    if (ghost_vertices(k).empty()) {
      REQUIRE(corner != nullptr);
      CHECK(*corner == AbelianGroup::free(1));
    } else {
      CHECK(corner == nullptr);
    }
  }
}

TEST_CASE("hochster entries respect the projective plane torsion") {
  SimplicialComplex p = from_facets(6, {Face::of({1, 2, 5}), Face::of({1, 2, 6}),
                                        Face::of({1, 3, 4}), Face::of({1, 3, 6}),
                                        Face::of({1, 4, 5}), Face::of({2, 3, 4}),
                                        Face::of({2, 3, 5}), Face::of({2, 4, 6}),
                                        Face::of({3, 5, 6}), Face::of({4, 5, 6})});
  BigradedTable h = hochster_table(p);
  // The full subset contributes reduced degree 1, weight 6, degree shift 4.
  const AbelianGroup* top = h.find(4, 6);
  REQUIRE(top != nullptr);
  CHECK(*top == AbelianGroup{0, {Int(2)}});
  BigradedTable hh = double_homology(p);
  const AbelianGroup* corner = hh.find(0, 0);
  REQUIRE(corner != nullptr);
  CHECK(*corner == AbelianGroup::free(1));
}

TEST_CASE("tables are invariant under vertex relabeling") {
  std::vector<std::vector<int>> perms{{2, 1, 3, 4}, {4, 3, 2, 1}, {2, 3, 4, 1}};
  SimplicialComplex k = cycle_with_chord();
  BigradedTable h = hochster_table(k);
  BigradedTable hh = double_homology(k);
  for (const auto& perm : perms) {
    SimplicialComplex r = relabel(k, perm);
    CHECK(hochster_table(r).rows() == h.rows());
    CHECK(double_homology(r).rows() == hh.rows());
  }
}

TEST_CASE("tables are deterministic across repeated runs and job counts") {
  SimplicialComplex k = random_complex(6, Density{2, 5}, 0xabcdef);
  BigradedTable h1 = hochster_table(k, 1);
  BigradedTable h4 = hochster_table(k, 4);
  CHECK(h1.rows() == h4.rows());
  BigradedTable d1 = double_homology(k, 1);
  BigradedTable d4 = double_homology(k, 4);
  CHECK(d1.rows() == d4.rows());
}

TEST_CASE("subcomplex sweep rejects oversized ground sets") {
  std::vector<Face> singletons;
  for (int v = 1; v <= 17; ++v) singletons.push_back(Face::singleton(v));
  SimplicialComplex k = from_facets(17, singletons);
  CHECK_THROWS_AS(SubcomplexHomology{k}, InputError);
}

TEST_CASE("total hochster rank equals the moment angle manifold of a sphere") {
  // Joining boundaries keeps one class at the bottom and one at the top.
  for (int m : {3, 4}) {
    BigradedTable h = hochster_table(sphere_boundary(m));
    long long total = 0;
    for (auto& [kk, l, g] : h.rows()) {
      total += g.free_rank;
      CHECK(g.torsion.empty());
    }
    CHECK(total == 2);
  }
}
