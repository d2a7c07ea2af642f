#include <bihochster/wedge.hpp>

#include <numeric>

namespace bihochster {

namespace {

// <V(K1)> glued to <V(K2)> along sigma. Callers have already validated the
// decomposition, which forces the two supports to meet exactly in sigma.
SimplicialComplex companion(const SimplicialComplex& k1, const SimplicialComplex& k2,
                            Face sigma) {
  int m = k1.vertex_count();
  SimplicialComplex s1 = from_facets(m, {vertex_support(k1)});
  SimplicialComplex s2 = from_facets(m, {vertex_support(k2)});
  return face_sum(s1, s2, sigma);
}

}  // namespace

std::optional<WedgeDecomposition> find_wedge_decomposition(const SimplicialComplex& k) {
  const std::vector<Face> all = facets(k);
  for (Face sigma : k.faces()) {
    std::vector<Face> rel;
    for (Face f : all)
      if (!f.subset_of(sigma)) rel.push_back(f);
    if (rel.size() < 2) continue;

    // Components of the overlap graph: facets are adjacent when their
    // intersection sticks out of sigma.
    std::vector<int> parent(rel.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
      while (parent[std::size_t(i)] != i) {
        parent[std::size_t(i)] = parent[std::size_t(parent[std::size_t(i)])];
        i = parent[std::size_t(i)];
      }
      return i;
    };
    for (std::size_t i = 0; i < rel.size(); ++i)
      for (std::size_t j = i + 1; j < rel.size(); ++j)
        if (!rel[i].intersect(rel[j]).subset_of(sigma)) {
          int a = find(int(i)), b = find(int(j));
          if (a != b) parent[std::size_t(std::max(a, b))] = std::min(a, b);
        }

    int root = find(0);
    std::vector<Face> group1{sigma}, group2{sigma};
    for (std::size_t i = 0; i < rel.size(); ++i)
      (find(int(i)) == root ? group1 : group2).push_back(rel[i]);
    if (group2.size() == 1) continue;  // single component

    WedgeDecomposition d = make_wedge_decomposition(from_facets(k.vertex_count(), group1),
                                                    from_facets(k.vertex_count(), group2), sigma);
    if (!(d.whole == k)) throw InternalError("wedge split does not reassemble the complex");
    return d;
  }
  return std::nullopt;
}

WedgeDecomposition make_wedge_decomposition(const SimplicialComplex& k1,
                                            const SimplicialComplex& k2, Face sigma) {
  SimplicialComplex whole = face_sum(k1, k2, sigma);
  return WedgeDecomposition{k1, k2, sigma, companion(k1, k2, sigma), std::move(whole)};
}

SimplicialComplex build_l(const SimplicialComplex& k1, const SimplicialComplex& k2, Face sigma) {
  SimplicialComplex whole = face_sum(k1, k2, sigma);
  if (!ghost_vertices(whole).empty())
    throw DecompositionError("companion complex requires a ghost-free union");
  return companion(k1, k2, sigma);
}

namespace {

struct SesContext {
  SimplicialComplex a, b, u, l;
  HomologyBasis ha, hb, hu, hl;
};

SesContext ses_context(const WedgeDecomposition& d, Face j) {
  SimplicialComplex a = full_subcomplex(d.k1, j);
  SimplicialComplex b = full_subcomplex(d.k2, j);
  SimplicialComplex u = full_subcomplex(d.whole, j);
  SimplicialComplex l = full_subcomplex(d.l, j);
  HomologyBasis ha = reduced_homology(a);
  HomologyBasis hb = reduced_homology(b);
  HomologyBasis hu = reduced_homology(u);
  HomologyBasis hl = reduced_homology(l);
  return SesContext{std::move(a), std::move(b), std::move(u), std::move(l),
                    std::move(ha), std::move(hb), std::move(hu), std::move(hl)};
}

bool ses_exact_at(const SesContext& c, int n) {
  const PresentedGroup& ga = c.ha.at(n).group;
  const PresentedGroup& gb = c.hb.at(n).group;
  const PresentedGroup& gu = c.hu.at(n).group;
  const PresentedGroup& gl = c.hl.at(n).group;
  if (ga.generator_count() + gb.generator_count() + gu.generator_count() +
          gl.generator_count() ==
      0)
    return true;

  IntMatrix psi = induced_map(c.a, c.u, n, c.ha, c.hu)
                      .hstack(induced_map(c.b, c.u, n, c.hb, c.hu));
  IntMatrix phi = induced_map(c.u, c.l, n, c.hu, c.hl);

  // Injective on the left.
  if (!kernel_group(direct_sum(ga, gb), psi, gu.relations()).trivial()) return false;
  // Composite zero, then nothing extra in the middle kernel.
  IntMatrix composite = phi * psi;
  for (int col = 0; col < composite.cols(); ++col)
    if (!gl.is_zero(composite.col(col))) return false;
  if (!subquotient(gu, phi, gl.relations(), psi).trivial()) return false;
  // Surjective on the right.
  return cokernel_group(gl, phi).trivial();
}

}  // namespace

bool check_ses(const WedgeDecomposition& d, Face j, int n) {
  if (j.empty()) throw InputError("check_ses: subset must be nonempty");
  if (n < 0) throw InputError("check_ses: degree must be nonnegative");
  return ses_exact_at(ses_context(d, j), n);
}

SesReport check_ses_all(const WedgeDecomposition& d) {
  const int m = d.whole.vertex_count();
  SesReport report;
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m); ++bits) {
    SesContext c = ses_context(d, Face(bits));
    for (int n = 0; n <= m; ++n) {
      ++report.checked;
      if (!ses_exact_at(c, n)) report.failures.push_back(SesFailure{Face(bits), n});
    }
  }
  return report;
}

bool MvReport::ok() const {
  for (const MvDegree& d : degrees)
    if (!d.ok()) return false;
  return true;
}

MvReport mayer_vietoris_report(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count())
    throw InputError("Mayer-Vietoris requires a common ground set");
  const int m = a.vertex_count();
  SimplicialComplex u = complex_union(a, b);
  SimplicialComplex c = complex_intersection(a, b);
  HomologyBasis ha = reduced_homology(a);
  HomologyBasis hb = reduced_homology(b);
  HomologyBasis hu = reduced_homology(u);
  HomologyBasis hc = reduced_homology(c);

  // i(x) = (x, -x) into the sum, j(p, q) = p + q into the union; degrees
  // outside the complexes carry zero groups and empty matrices.
  std::vector<IntMatrix> imat, jmat;
  std::vector<PresentedGroup> ds;
  for (int n = -1; n <= m; ++n) {
    IntMatrix ia = induced_map(c, a, n, hc, ha);
    IntMatrix ib = induced_map(c, b, n, hc, hb);
    imat.push_back(ia.vstack(ib.negated()));
    IntMatrix ja = induced_map(a, u, n, ha, hu);
    IntMatrix jb = induced_map(b, u, n, hb, hu);
    jmat.push_back(ja.hstack(jb));
    ds.push_back(direct_sum(ha.at(n).group, hb.at(n).group));
  }

  MvReport report;
  for (int n = m; n >= -1; --n) {
    const std::size_t slot = std::size_t(n) + 1;
    MvDegree deg{n, true, false, false};
    IntMatrix composite = jmat[slot] * imat[slot];
    for (int col = 0; col < composite.cols(); ++col)
      if (!hu.at(n).group.is_zero(composite.col(col))) deg.composite_zero = false;
    deg.middle_exact =
        subquotient(ds[slot], jmat[slot], hu.at(n).group.relations(), imat[slot]).trivial();
    AbelianGroup connecting_image = cokernel_group(hu.at(n).group, jmat[slot]);
    AbelianGroup next_kernel =
        n - 1 >= -1 ? kernel_group(hc.at(n - 1).group, imat[slot - 1], ds[slot - 1].relations())
                    : AbelianGroup{};
    deg.connecting_iso = connecting_image == next_kernel;
    report.degrees.push_back(deg);
  }
  return report;
}

bool mayer_vietoris_verify(const SimplicialComplex& a, const SimplicialComplex& b) {
  return mayer_vietoris_report(a, b).ok();
}

}  // namespace bihochster
