#pragma once

#include <bihochster/simplicial_complex.hpp>
#include <bihochster/wedge.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace bihochster {

// Exact inclusion probability num/den. Probabilities stay rational end to
// end; nothing downstream touches floating point.
struct Density {
  std::uint64_t num = 7;
  std::uint64_t den = 20;

  static Density parse(const std::string& text);  // "7/20" or a plain decimal like "0.35"
  std::string to_string() const;
  friend bool operator==(Density, Density) = default;
};

// Deterministic stream over std::mt19937_64, which the standard pins down
// bit for bit. Distribution classes are avoided on purpose: their outputs
// are implementation defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n)
  int pick(int lo, int hi);              // inclusive bounds
  bool coin(Density d) { return below(d.den) < d.num; }

 private:
  std::mt19937_64 gen_;
};

// splitmix64 step; decorrelates per-trial seeds derived from one base seed.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

// Downward closure of a coin flip per nonempty subset of [m]. Vertices not
// covered by any chosen subset come out as ghosts.
SimplicialComplex random_complex(int m, Density density, std::uint64_t seed);

// Same sweep restricted to a proper subset of [m], so at least one chosen
// ghost vertex survives.
SimplicialComplex random_complex_with_ghost(int m, Density density, std::uint64_t seed);

// A ghost-free complex assembled as a face sum of two random pieces with
// disjoint private vertex sets; the returned decomposition is the one used
// to build it. Requires m >= 2.
WedgeDecomposition random_wedge_decomposable(int m, std::uint64_t seed);

// Same shape but the second piece is the full simplex on sigma plus its
// private vertices.
WedgeDecomposition random_simplex_attachment(int m, std::uint64_t seed);

}  // namespace bihochster
