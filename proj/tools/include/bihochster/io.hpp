#pragma once

#include <bihochster/simplicial_complex.hpp>

#include <iosfwd>
#include <string>

namespace bihochster {

// Facet-list text or JSON, sniffed by a leading '{'. Text layout: the first
// significant line is m, then one facet per line as space-separated vertices,
// with '-' for the empty facet. Blank lines and '#' comment lines are
// skipped. InputError messages carry name:line context.
SimplicialComplex parse_complex(std::istream& in, const std::string& name);
SimplicialComplex read_complex_file(const std::string& path);

// Inverse of the text format: m, then one line per facet.
std::string to_cplx(const SimplicialComplex& k);

// {"facets":[[1,2],...],"m":4}
std::string to_json_string(const SimplicialComplex& k);

}  // namespace bihochster
