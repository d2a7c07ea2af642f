#include <bihochster/random_complex.hpp>

#include <numeric>
#include <sstream>

namespace bihochster {

Density Density::parse(const std::string& text) {
  auto fail = [&]() -> Density {
    throw InputError("bad density '" + text + "': want a fraction like 7/20 or a decimal");
  };
  if (text.empty()) return fail();
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  Density d;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!digits(a) || !digits(b) || a.size() > 18 || b.size() > 18) return fail();
    d.num = std::stoull(a);
    d.den = std::stoull(b);
  } else {
    auto dot = text.find('.');
    std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (!digits(whole) || (!frac.empty() && !digits(frac)) || frac.size() > 18) return fail();
    d.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) d.den *= 10;
    d.num = std::stoull(whole) * d.den + (frac.empty() ? 0 : std::stoull(frac));
  }
  if (d.den == 0 || d.num > d.den) return fail();  // probabilities only
  return d;
}

std::string Density::to_string() const {
  std::ostringstream os;
  os << num << "/" << den;
  return os.str();
}

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) throw InternalError("SeededRng::below(0)");
  return next() % n;  // small modulo bias is fine for test-case generation
}

int SeededRng::pick(int lo, int hi) {
  if (hi < lo) throw InternalError("SeededRng::pick: empty range");
  return lo + int(below(std::uint64_t(hi - lo) + 1));
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

SimplicialComplex random_complex(int m, Density density, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Face> gens;
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m); ++bits)
    if (rng.coin(density)) gens.push_back(Face(bits));
  return from_facets(m, gens);
}

SimplicialComplex random_complex_with_ghost(int m, Density density, std::uint64_t seed) {
  SeededRng rng(seed);
  int ghost_count = rng.pick(1, m);
  std::vector<int> verts(static_cast<std::size_t>(m));
  std::iota(verts.begin(), verts.end(), 1);
  for (int i = 0; i < ghost_count; ++i)
    std::swap(verts[std::size_t(i)], verts[std::size_t(i) + rng.below(std::uint64_t(m - i))]);
  Face live = Face::full(m);
  for (int i = 0; i < ghost_count; ++i) live = live.without(verts[std::size_t(i)]);
  std::vector<Face> gens;
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m); ++bits)
    if (Face(bits).subset_of(live) && rng.coin(density)) gens.push_back(Face(bits));
  return from_facets(m, gens);
}

namespace {

// Random piece on sigma plus a private vertex block: sigma is always a face,
// and every private vertex ends up covered, so face sums of two such pieces
// are ghost free on their union.
SimplicialComplex random_part(int m, Face sigma, Face priv, SeededRng& rng) {
  Face part = sigma.unite(priv);
  Density d{3 + rng.below(5), 10};
  std::vector<Face> gens{sigma};
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m); ++bits) {
    Face f(bits);
    if (f.cardinality() >= 2 && f.subset_of(part) && rng.coin(d)) gens.push_back(f);
  }
  Face covered;
  for (Face g : gens) covered = covered.unite(g);
  for (int v : priv.vertices())
    if (!covered.contains(v)) gens.push_back(Face::singleton(v));
  return from_facets(m, gens);
}

struct WedgeFrame {
  Face sigma;
  Face priv1;
  Face priv2;
};

WedgeFrame wedge_frame(int m, SeededRng& rng) {
  int sigma_size = int(rng.below(std::uint64_t(m - 1)));  // 0 .. m-2
  std::vector<int> verts(static_cast<std::size_t>(m));
  std::iota(verts.begin(), verts.end(), 1);
  for (int i = 0; i + 1 < m; ++i)
    std::swap(verts[std::size_t(i)], verts[std::size_t(i) + rng.below(std::uint64_t(m - i))]);
  WedgeFrame frame;
  int q = m - sigma_size;
  int size1 = 1 + int(rng.below(std::uint64_t(q - 1)));
  for (int i = 0; i < sigma_size; ++i) frame.sigma = frame.sigma.with(verts[std::size_t(i)]);
  for (int i = 0; i < size1; ++i)
    frame.priv1 = frame.priv1.with(verts[std::size_t(sigma_size + i)]);
  for (int i = sigma_size + size1; i < m; ++i) frame.priv2 = frame.priv2.with(verts[std::size_t(i)]);
  return frame;
}

}  // namespace

WedgeDecomposition random_wedge_decomposable(int m, std::uint64_t seed) {
  if (m < 2) throw InputError("wedge-decomposable generator needs m >= 2");
  SeededRng rng(seed);
  WedgeFrame frame = wedge_frame(m, rng);
  SimplicialComplex k1 = random_part(m, frame.sigma, frame.priv1, rng);
  SimplicialComplex k2 = random_part(m, frame.sigma, frame.priv2, rng);
  WedgeDecomposition d = make_wedge_decomposition(k1, k2, frame.sigma);
  if (!ghost_vertices(d.whole).empty())
    throw InternalError("wedge generator produced a ghost vertex");
  return d;
}

WedgeDecomposition random_simplex_attachment(int m, std::uint64_t seed) {
  if (m < 2) throw InputError("simplex attachment generator needs m >= 2");
  SeededRng rng(seed);
  WedgeFrame frame = wedge_frame(m, rng);
  SimplicialComplex k1 = random_part(m, frame.sigma, frame.priv1, rng);
  SimplicialComplex k2 = from_facets(m, {frame.sigma.unite(frame.priv2)});
  WedgeDecomposition d = make_wedge_decomposition(k1, k2, frame.sigma);
  if (!ghost_vertices(d.whole).empty())
    throw InternalError("simplex attachment generator produced a ghost vertex");
  return d;
}

}  // namespace bihochster
