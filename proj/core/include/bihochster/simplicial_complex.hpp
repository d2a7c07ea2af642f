#pragma once

#include <bihochster/errors.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bihochster {

// Subset of the vertex set [m] packed into a 64-bit word; vertex v (1-based)
// sits at bit v-1. Faces are ordered by (cardinality, numeric value), which
// is the canonical face order used everywhere downstream.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  static Face of(std::initializer_list<int> vertices);
  static Face full(int m);  // {1, ..., m}
  static Face singleton(int v);

  bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  Face with(int v) const { return Face(bits_ | (std::uint64_t(1) << (v - 1))); }
  Face without(int v) const { return Face(bits_ & ~(std::uint64_t(1) << (v - 1))); }

  int cardinality() const;
  bool empty() const { return bits_ == 0; }
  bool subset_of(Face o) const { return (bits_ & ~o.bits_) == 0; }
  Face intersect(Face o) const { return Face(bits_ & o.bits_); }
  Face unite(Face o) const { return Face(bits_ | o.bits_); }
  Face minus(Face o) const { return Face(bits_ & ~o.bits_); }

  std::uint64_t bits() const { return bits_; }
  std::vector<int> vertices() const;  // ascending, 1-based
  std::string to_string() const;      // "1,2,3"; "-" for the empty face

  friend bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }
  friend bool operator<(Face a, Face b);

 private:
  std::uint64_t bits_ = 0;
};

// Finite abstract simplicial complex on the ground set [m]. The face list is
// kept sorted in canonical face order, always contains the empty face, and is
// validated to be downward closed on every construction path. Ghost vertices
// (elements of [m] in no face) are permitted and meaningful.
class SimplicialComplex {
 public:
  SimplicialComplex(int vertex_count, std::vector<Face> faces);

  int vertex_count() const { return m_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool contains(Face f) const;
  int dimension() const;  // -1 for the complex {empty face}

  // Faces of the given cardinality, in canonical order.
  std::vector<Face> faces_of_cardinality(int k) const;

  // Stable 64-bit digest of (m, facet list); used in reports.
  std::uint64_t fingerprint() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int m_ = 0;
  std::vector<Face> faces_;
};

// Downward closure of the given generating faces.
SimplicialComplex from_facets(int m, const std::vector<Face>& generators);

// K_J: faces of k contained in j, on the same ground set [m].
SimplicialComplex full_subcomplex(const SimplicialComplex& k, Face j);

// Vertices of [m] not contained in any face, as a Face.
Face ghost_vertices(const SimplicialComplex& k);

// Union of all faces, as a Face.
Face vertex_support(const SimplicialComplex& k);

// Inclusion-maximal faces, in canonical order. The complex {empty face} has
// the single facet "-".
std::vector<Face> facets(const SimplicialComplex& k);

// K1 and K2 on a common ground set with K1 cap K2 equal to the full simplex
// on sigma, neither side equal to that simplex; the result is the union.
// Violations raise DecompositionError.
SimplicialComplex face_sum(const SimplicialComplex& k1, const SimplicialComplex& k2, Face sigma);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace bihochster
