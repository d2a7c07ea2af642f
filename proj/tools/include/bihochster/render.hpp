#pragma once

#include <bihochster/hochster.hpp>
#include <bihochster/verify.hpp>
#include <bihochster/wedge.hpp>

#include <optional>
#include <string>

namespace bihochster {

// Every renderer is a pure function of its inputs, so stdout is byte stable
// for a fixed input and format. Timing and other wall-clock data never pass
// through here.
enum class OutputFormat { Tsv, Json, Markdown };

std::optional<OutputFormat> format_from_name(const std::string& name);  // tsv | json | md

// Bigraded tables print k and l as the nonnegative display pair: an entry at
// (k, l) stands for the bidegree (-k, 2l), and the printed l is the doubled
// one.
std::string render_bigraded(const BigradedTable& table, OutputFormat f);
std::string render_homology(const HomologyBasis& h, OutputFormat f);

// One row per full subcomplex K_J and degree with nonzero reduced homology,
// J ordered by (cardinality, bits). J = "-" is the empty subset.
std::string render_homology_sweep(const SubcomplexHomology& sweep, OutputFormat f);
std::string render_wedge(const std::optional<WedgeDecomposition>& d, OutputFormat f);
std::string render_ses(const SesReport& r, OutputFormat f);
std::string render_mv(const MvReport& r, OutputFormat f);
std::string render_suites(const std::vector<SuiteReport>& reports, OutputFormat f);

}  // namespace bihochster
