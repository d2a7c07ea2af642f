#pragma once

#include <stdexcept>
#include <string>

namespace bihochster {

// Bad user-facing input: vertices out of range, malformed files, invalid flags.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A face-sum precondition failed: the intersection of the two complexes is not
// the simplex on sigma, or one side is exactly that simplex.
struct DecompositionError : InputError {
  using InputError::InputError;
};

// A broken internal invariant (d*d != 0 modulo relations, an unsolvable
// induced-map system). Always a bug, never a data problem.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bihochster
