#include <bihochster/hochster.hpp>

#include <bihochster/parallel.hpp>

#include <bit>

namespace bihochster {

BigradedTable::BigradedTable(Kind kind, int m) : kind_(kind), m_(m) {
  if (m < 1 || m > 63) throw InputError("vertex count must be between 1 and 63");
}

void BigradedTable::set(int k, int l, AbelianGroup g) {
  if (l < 0 || l > m_ || k < 0 || k > l) throw InternalError("BigradedTable: bidegree out of range");
  if (g.trivial())
    entries_.erase({l, k});
  else
    entries_[{l, k}] = std::move(g);
}

void BigradedTable::add(int k, int l, const AbelianGroup& g) {
  if (g.trivial()) return;
  auto it = entries_.find({l, k});
  if (it == entries_.end())
    set(k, l, g);
  else
    it->second = direct_sum(it->second, g);
}

const AbelianGroup* BigradedTable::find(int k, int l) const {
  auto it = entries_.find({l, k});
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::tuple<int, int, AbelianGroup>> BigradedTable::rows() const {
  std::vector<std::tuple<int, int, AbelianGroup>> out;
  out.reserve(entries_.size());
  for (const auto& [key, group] : entries_) out.emplace_back(key.second, key.first, group);
  return out;
}

SubcomplexHomology::SubcomplexHomology(const SimplicialComplex& k, int jobs) : k_(k) {
  if (k.vertex_count() > 16)
    throw InputError("subcomplex sweep supports at most 16 vertices");
  const std::size_t count = std::size_t(1) << k.vertex_count();
  entries_.resize(count);
  parallel_for(count, jobs, [&](std::size_t bits) {
    SimplicialComplex sub = full_subcomplex(k_, Face(bits));
    ChainBasis basis(sub);
    HomologyBasis homology = reduced_homology(sub);
    entries_[bits] = std::make_unique<Entry>(Entry{std::move(sub), std::move(basis), std::move(homology)});
  });
}

const SubcomplexHomology::Entry& SubcomplexHomology::entry(Face j) const {
  if (j.bits() >= entries_.size()) throw InputError("subset outside ground set");
  return *entries_[j.bits()];
}

const SimplicialComplex& SubcomplexHomology::subcomplex(Face j) const { return entry(j).complex; }
const ChainBasis& SubcomplexHomology::chain_basis(Face j) const { return entry(j).basis; }
const HomologyBasis& SubcomplexHomology::homology(Face j) const { return entry(j).homology; }

const IntegerSolver& SubcomplexHomology::solver(Face target, int degree) {
  auto key = std::make_pair(target.bits(), degree);
  auto it = solvers_.find(key);
  if (it != solvers_.end()) return it->second;
  const Entry& e = entry(target);
  const HomologyGroup& h = e.homology.at(degree);
  IntMatrix gens(e.basis.size(degree), h.group.generator_count());
  for (int j = 0; j < gens.cols(); ++j) gens.set_col(j, h.representatives[std::size_t(j)]);
  return solvers_.emplace(key, IntegerSolver(gens.hstack(boundary_matrix(e.basis, degree + 1))))
      .first->second;
}

const IntMatrix& SubcomplexHomology::induced(Face j, int x, int degree) {
  if (j.contains(x)) throw InternalError("induced: vertex already present");
  auto key = std::make_tuple(j.bits(), x, degree);
  auto it = induced_.find(key);
  if (it != induced_.end()) return it->second;

  Face t = j.with(x);
  const HomologyGroup& src = homology(j).at(degree);
  const HomologyGroup& tgt = homology(t).at(degree);
  IntMatrix result(tgt.group.generator_count(), src.group.generator_count());
  if (src.group.generator_count() > 0)
    result = induced_map_solved(chain_basis(j), src, chain_basis(t), tgt, solver(t, degree), degree);
  return induced_.emplace(key, std::move(result)).first->second;
}

namespace {

int epsilon(int x, Face j) {
  std::uint64_t below = j.bits() & ((std::uint64_t(1) << (x - 1)) - 1);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

}  // namespace

CochainComplexCH build_ch_complex(SubcomplexHomology& cache, int n) {
  const int m = cache.complex().vertex_count();
  CochainComplexCH ch;
  ch.n = n;
  ch.m = m;
  ch.levels.resize(std::size_t(m) + 1);

  // Assemble each level as the direct sum over |J| = l, keeping only subsets
  // that contribute generators. Subsets run in ascending bit order.
  std::vector<std::map<std::uint64_t, int>> position(std::size_t(m) + 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits) {
    Face j(bits);
    int l = j.cardinality();
    const HomologyGroup& h = cache.homology(j).at(n - 1);
    if (h.group.generator_count() == 0) continue;
    ChLevel& level = ch.levels[std::size_t(l)];
    position[std::size_t(l)][bits] = int(level.summands.size());
    level.summands.push_back(ChSummand{j, 0});
  }
  for (int l = 0; l <= m; ++l) {
    ChLevel& level = ch.levels[std::size_t(l)];
    PresentedGroup assembled;
    int offset = 0;
    for (ChSummand& s : level.summands) {
      const PresentedGroup& part = cache.homology(s.subset).at(n - 1).group;
      s.offset = offset;
      offset += part.generator_count();
      assembled = direct_sum(assembled, part);
    }
    level.group = std::move(assembled);
  }

  // The differential adds one vertex at a time; the sign is the vertex
  // position parity inside J, with a global parity from the row index.
  const int row_sign = n % 2 == 0 ? 1 : -1;
  for (int l = 0; l <= m; ++l) {
    ChLevel& level = ch.levels[std::size_t(l)];
    int target_gens = l < m ? ch.levels[std::size_t(l) + 1].group.generator_count() : 0;
    IntMatrix d(target_gens, level.group.generator_count());
    if (l < m) {
      const ChLevel& next = ch.levels[std::size_t(l) + 1];
      for (const ChSummand& s : level.summands) {
        for (int x = 1; x <= m; ++x) {
          if (s.subset.contains(x)) continue;
          auto pos = position[std::size_t(l) + 1].find(s.subset.with(x).bits());
          if (pos == position[std::size_t(l) + 1].end()) continue;
          const ChSummand& t = next.summands[std::size_t(pos->second)];
          const IntMatrix& block = cache.induced(s.subset, x, n - 1);
          Int sign = row_sign * epsilon(x, s.subset);
          for (int r = 0; r < block.rows(); ++r)
            for (int c = 0; c < block.cols(); ++c)
              d.at(t.offset + r, s.offset + c) = sign * block.at(r, c);
        }
      }
    }
    level.differential = std::move(d);
  }
  return ch;
}

IntMatrix ch_differential(const SimplicialComplex& k, int n, int l) {
  if (l < 0 || l > k.vertex_count()) throw InputError("level outside 0..m");
  SubcomplexHomology cache(k);
  return build_ch_complex(cache, n).levels[std::size_t(l)].differential;
}

void verify_ch_squares_to_zero(const CochainComplexCH& ch) {
  for (int l = 0; l + 2 <= ch.m; ++l) {
    const IntMatrix product =
        ch.levels[std::size_t(l) + 1].differential * ch.levels[std::size_t(l)].differential;
    const PresentedGroup& target = ch.levels[std::size_t(l) + 2].group;
    for (int j = 0; j < product.cols(); ++j)
      if (!target.is_zero(product.col(j)))
        throw InternalError("differential does not square to zero");
  }
}

BigradedTable hochster_table(const SimplicialComplex& k, int jobs) {
  SubcomplexHomology cache(k, jobs);
  BigradedTable out(BigradedTable::Kind::Homology, k.vertex_count());
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << k.vertex_count()); ++bits) {
    Face j(bits);
    const int l = j.cardinality();
    const HomologyBasis& h = cache.homology(j);
    for (int p : h.support()) out.add(l - p - 1, l, h.at(p).group.structure());
  }
  return out;
}

BigradedTable double_homology(const SimplicialComplex& k, int jobs) {
  SubcomplexHomology cache(k, jobs);
  const int m = k.vertex_count();
  BigradedTable out(BigradedTable::Kind::DoubleHomology, m);
  for (int n = 0; n <= m; ++n) {
    CochainComplexCH ch = build_ch_complex(cache, n);
    bool inhabited = false;
    for (const ChLevel& level : ch.levels)
      if (level.group.generator_count() > 0) inhabited = true;
    if (!inhabited) continue;
    verify_ch_squares_to_zero(ch);
    for (int l = 0; l <= m; ++l) {
      const ChLevel& level = ch.levels[std::size_t(l)];
      if (level.group.generator_count() == 0) continue;
      IntMatrix target_relations =
          l < m ? ch.levels[std::size_t(l) + 1].group.relations()
                : IntMatrix(0, 0);
      IntMatrix incoming = l > 0 ? ch.levels[std::size_t(l) - 1].differential
                                 : IntMatrix(level.group.generator_count(), 0);
      AbelianGroup hh =
          subquotient(level.group, level.differential, target_relations, incoming);
      if (!hh.trivial()) out.set(l - n, l, hh);
    }
  }
  return out;
}

}  // namespace bihochster
