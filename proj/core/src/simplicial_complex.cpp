#include <bihochster/simplicial_complex.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace bihochster {

Face Face::of(std::initializer_list<int> vertices) {
  Face f;
  for (int v : vertices) {
    if (v < 1 || v > 63) throw InputError("vertex out of range: " + std::to_string(v));
    f = f.with(v);
  }
  return f;
}

Face Face::full(int m) {
  if (m < 0 || m > 63) throw InputError("ground set size out of range");
  return m == 0 ? Face() : Face((std::uint64_t(1) << m) - 1);
}

Face Face::singleton(int v) { return Face().with(v); }

int Face::cardinality() const { return std::popcount(bits_); }

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Face::to_string() const {
  if (empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (int v : vertices()) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  return os.str();
}

bool operator<(Face a, Face b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return a.bits_ < b.bits_;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> faces)
    : m_(vertex_count), faces_(std::move(faces)) {
  if (m_ < 1 || m_ > 63) throw InputError("vertex count must be between 1 and 63");
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  if (faces_.empty() || !faces_.front().empty())
    throw InputError("complex must contain the empty face");
  Face ground = Face::full(m_);
  for (Face f : faces_) {
    if (!f.subset_of(ground)) throw InputError("face outside the ground set: " + f.to_string());
    for (int v : f.vertices())
      if (!contains(f.without(v)))
        throw InputError("face family is not downward closed at " + f.to_string());
  }
}

bool SimplicialComplex::contains(Face f) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  return it != faces_.end() && *it == f;
}

int SimplicialComplex::dimension() const { return faces_.back().cardinality() - 1; }

std::vector<Face> SimplicialComplex::faces_of_cardinality(int k) const {
  std::vector<Face> out;
  for (Face f : faces_)
    if (f.cardinality() == k) out.push_back(f);
  return out;
}

std::uint64_t SimplicialComplex::fingerprint() const {
  // FNV-1a over m and the facet bit patterns.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(std::uint64_t(m_));
  for (Face f : facets(*this)) mix(f.bits());
  return h;
}

SimplicialComplex from_facets(int m, const std::vector<Face>& generators) {
  Face ground = Face::full(m);
  for (Face g : generators)
    if (!g.subset_of(ground)) throw InputError("facet outside the ground set: " + g.to_string());
  std::vector<Face> closed;
  closed.push_back(Face());
  for (Face g : generators) {
    // All subsets of g, via the standard submask walk.
    std::uint64_t bits = g.bits();
    std::uint64_t s = bits;
    while (s != 0) {
      closed.push_back(Face(s));
      s = (s - 1) & bits;
    }
  }
  return SimplicialComplex(m, std::move(closed));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, Face j) {
  if (!j.subset_of(Face::full(k.vertex_count()))) throw InputError("subset outside ground set");
  std::vector<Face> kept;
  for (Face f : k.faces())
    if (f.subset_of(j)) kept.push_back(f);
  return SimplicialComplex(k.vertex_count(), std::move(kept));
}

Face vertex_support(const SimplicialComplex& k) {
  Face support;
  for (Face f : k.faces()) support = support.unite(f);
  return support;
}

Face ghost_vertices(const SimplicialComplex& k) {
  return Face::full(k.vertex_count()).minus(vertex_support(k));
}

std::vector<Face> facets(const SimplicialComplex& k) {
  std::vector<Face> out;
  for (Face f : k.faces()) {
    bool maximal = true;
    for (int v = 1; v <= k.vertex_count() && maximal; ++v)
      if (!f.contains(v) && k.contains(f.with(v))) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

SimplicialComplex face_sum(const SimplicialComplex& k1, const SimplicialComplex& k2, Face sigma) {
  if (k1.vertex_count() != k2.vertex_count())
    throw InputError("face sum requires a common ground set");
  // The overlap must be exactly the full simplex on sigma.
  std::vector<Face> overlap;
  std::set_intersection(k1.faces().begin(), k1.faces().end(), k2.faces().begin(),
                        k2.faces().end(), std::back_inserter(overlap));
  std::size_t expected = std::size_t(1) << sigma.cardinality();
  if (overlap.size() != expected)
    throw DecompositionError("intersection is not the simplex on " + sigma.to_string());
  for (Face f : overlap)
    if (!f.subset_of(sigma))
      throw DecompositionError("intersection is not the simplex on " + sigma.to_string());
  // Properness: a simplex summand of its own boundary tells us nothing.
  if (k1.face_count() == expected || k2.face_count() == expected)
    throw DecompositionError("face sum piece equals the simplex on " + sigma.to_string());
  return complex_union(k1, k2);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count()) throw InputError("union requires a common ground set");
  std::vector<Face> merged;
  std::set_union(a.faces().begin(), a.faces().end(), b.faces().begin(), b.faces().end(),
                 std::back_inserter(merged));
  return SimplicialComplex(a.vertex_count(), std::move(merged));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count())
    throw InputError("intersection requires a common ground set");
  std::vector<Face> common;
  std::set_intersection(a.faces().begin(), a.faces().end(), b.faces().begin(), b.faces().end(),
                        std::back_inserter(common));
  return SimplicialComplex(a.vertex_count(), std::move(common));
}

}  // namespace bihochster
