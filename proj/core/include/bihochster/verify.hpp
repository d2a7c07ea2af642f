#pragma once

#include <bihochster/hochster.hpp>
#include <bihochster/random_complex.hpp>
#include <bihochster/wedge.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bihochster {

// Property suites over seeded random complexes. Every trial is a pure
// function of (base seed, trial index), so runs reproduce exactly across
// machines and thread counts.
enum class Suite { Ghost, Wedge, Prop41, DSquared, Ses, Mv, All };

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

struct RunConfig {
  Suite suite = Suite::All;
  int trials = 100;
  int max_vertices = 6;  // hard cap 10; span of 8..10 is slow and warned about by the CLI
  Density density{};
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct Fixture {
  std::string label;
  SimplicialComplex complex;
};

struct TrialResult {
  int index = 0;
  std::uint64_t seed = 0;         // derived per-trial seed
  std::uint64_t fingerprint = 0;  // digest of the tested instance
  std::string property;
  bool pass = false;
  std::string witness;            // empty on pass
  std::vector<Fixture> fixtures;  // instance reprint, populated on failure
};

struct SuiteReport {
  Suite suite = Suite::All;
  std::uint64_t base_seed = 0;
  std::vector<TrialResult> trials;
  double wall_seconds = 0;  // informational; stdout renderers must not use it

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

SuiteReport run_suite(Suite suite, const RunConfig& cfg);

// The one requested suite, or all six in declaration order for Suite::All.
std::vector<SuiteReport> verify_theorems(const RunConfig& cfg);

}  // namespace bihochster
