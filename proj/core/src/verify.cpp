#include <bihochster/verify.hpp>

#include <bihochster/parallel.hpp>

#include <chrono>
#include <sstream>

namespace bihochster {

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Ghost: return "ghost";
    case Suite::Wedge: return "wedge";
    case Suite::Prop41: return "prop41";
    case Suite::DSquared: return "dsquared";
    case Suite::Ses: return "ses";
    case Suite::Mv: return "mv";
    case Suite::All: return "all";
  }
  throw InternalError("unknown suite");
}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (Suite s : {Suite::Ghost, Suite::Wedge, Suite::Prop41, Suite::DSquared, Suite::Ses,
                  Suite::Mv, Suite::All})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

int SuiteReport::passed() const {
  int n = 0;
  for (const TrialResult& t : trials)
    if (t.pass) ++n;
  return n;
}

int SuiteReport::failed() const { return int(trials.size()) - passed(); }

namespace {

std::string bidegree_list(const BigradedTable& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, l, group] : t.rows()) {
    if (!first) os << "; ";
    first = false;
    os << "(" << k << "," << 2 * l << ")=" << group.to_string();
  }
  return os.str();
}

std::uint64_t mix_fingerprints(std::uint64_t a, std::uint64_t b) {
  return a ^ (b * 0x9e3779b97f4a7c15ull + 0x517cc1b727220a95ull);
}

void validate(const RunConfig& cfg) {
  if (cfg.trials < 1) throw InputError("trials must be at least 1");
  if (cfg.max_vertices < 1) throw InputError("vertex bound must be at least 1");
  if (cfg.max_vertices > 10)
    throw InputError("vertex bound above 10 is not supported for fuzzing");
  if (cfg.jobs < 1) throw InputError("jobs must be at least 1");
}

TrialResult ghost_trial(const RunConfig& cfg, int index) {
  TrialResult tr;
  tr.index = index;
  tr.seed = trial_seed(cfg.seed, std::uint64_t(index));
  tr.property = "hh_vanishes_with_ghost";
  SeededRng rng(tr.seed);
  int m = rng.pick(1, cfg.max_vertices);
  SimplicialComplex k = random_complex_with_ghost(m, cfg.density, rng.next());
  tr.fingerprint = k.fingerprint();
  if (ghost_vertices(k).empty()) throw InternalError("ghost generator lost its ghost");
  BigradedTable hh = double_homology(k);
  tr.pass = hh.empty();
  if (!tr.pass) {
    tr.witness = "nonzero at " + bidegree_list(hh);
    tr.fixtures.push_back(Fixture{"K", k});
  }
  return tr;
}

TrialResult wedge_trial(const RunConfig& cfg, int index) {
  TrialResult tr;
  tr.index = index;
  tr.seed = trial_seed(cfg.seed, std::uint64_t(index));
  tr.property = "hh_wedge_shape";
  SeededRng rng(tr.seed);
  int m = rng.pick(2, std::max(2, cfg.max_vertices));
  WedgeDecomposition d = random_wedge_decomposable(m, rng.next());
  tr.fingerprint = d.whole.fingerprint();
  BigradedTable hh = double_homology(d.whole);
  const AbelianGroup* zero = hh.find(0, 0);
  const AbelianGroup* one = hh.find(1, 2);
  tr.pass = hh.rows().size() == 2 && zero && one && *zero == AbelianGroup::free(1) &&
            *one == AbelianGroup::free(1);
  if (!tr.pass) {
    tr.witness = "sigma=" + d.sigma.to_string() + "; table " + bidegree_list(hh);
    tr.fixtures.push_back(Fixture{"K", d.whole});
    tr.fixtures.push_back(Fixture{"K1", d.k1});
    tr.fixtures.push_back(Fixture{"K2", d.k2});
  }
  return tr;
}

TrialResult prop41_trial(const RunConfig& cfg, int index) {
  TrialResult tr;
  tr.index = index;
  tr.seed = trial_seed(cfg.seed, std::uint64_t(index));
  tr.property = "hh_weight_zero_dichotomy";
  SeededRng rng(tr.seed);
  int m = rng.pick(1, cfg.max_vertices);
  SimplicialComplex k = random_complex(m, cfg.density, rng.next());
  tr.fingerprint = k.fingerprint();
  BigradedTable hh = double_homology(k);
  const AbelianGroup* corner = hh.find(0, 0);
  if (ghost_vertices(k).empty())
    tr.pass = corner != nullptr && *corner == AbelianGroup::free(1);
  else
    tr.pass = corner == nullptr;
  if (!tr.pass) {
    tr.witness = std::string("ghosts=") + ghost_vertices(k).to_string() + "; corner=" +
                 (corner ? corner->to_string() : "0");
    tr.fixtures.push_back(Fixture{"K", k});
  }
  return tr;
}

TrialResult dsquared_trial(const RunConfig& cfg, int index) {
  TrialResult tr;
  tr.index = index;
  tr.seed = trial_seed(cfg.seed, std::uint64_t(index));
  tr.property = "ch_differential_squares_to_zero";
  SeededRng rng(tr.seed);
  int m = rng.pick(1, cfg.max_vertices);
  SimplicialComplex k = random_complex(m, cfg.density, rng.next());
  tr.fingerprint = k.fingerprint();
  tr.pass = true;
  SubcomplexHomology cache(k);
  for (int n = 0; n <= m && tr.pass; ++n) {
    CochainComplexCH ch = build_ch_complex(cache, n);
    try {
      verify_ch_squares_to_zero(ch);
    } catch (const InternalError&) {
      tr.pass = false;
      tr.witness = "d*d != 0 in row n=" + std::to_string(n);
      tr.fixtures.push_back(Fixture{"K", k});
    }
  }
  return tr;
}

TrialResult ses_trial(const RunConfig& cfg, int index) {
  TrialResult tr;
  tr.index = index;
  tr.seed = trial_seed(cfg.seed, std::uint64_t(index));
  tr.property = "ses_exact";
  SeededRng rng(tr.seed);
  int m = rng.pick(2, std::max(2, cfg.max_vertices));
  WedgeDecomposition d = random_wedge_decomposable(m, rng.next());
  tr.fingerprint = d.whole.fingerprint();
  SesReport report = check_ses_all(d);
  tr.pass = report.ok();
  if (!tr.pass) {
    std::ostringstream os;
    os << "failed at";
    for (const SesFailure& f : report.failures) os << " (J=" << f.j.to_string() << ",n=" << f.n << ")";
    tr.witness = os.str();
    tr.fixtures.push_back(Fixture{"K", d.whole});
    tr.fixtures.push_back(Fixture{"K1", d.k1});
    tr.fixtures.push_back(Fixture{"K2", d.k2});
    tr.fixtures.push_back(Fixture{"L", d.l});
  }
  return tr;
}

TrialResult mv_trial(const RunConfig& cfg, int index) {
  TrialResult tr;
  tr.index = index;
  tr.seed = trial_seed(cfg.seed, std::uint64_t(index));
  tr.property = "mayer_vietoris_exact";
  SeededRng rng(tr.seed);
  int m = rng.pick(1, cfg.max_vertices);
  SimplicialComplex k1 = random_complex(m, cfg.density, rng.next());
  SimplicialComplex k2 = random_complex(m, cfg.density, rng.next());
  tr.fingerprint = mix_fingerprints(k1.fingerprint(), k2.fingerprint());
  MvReport report = mayer_vietoris_report(k1, k2);
  tr.pass = report.ok();
  if (!tr.pass) {
    std::ostringstream os;
    os << "failed at n =";
    for (const MvDegree& deg : report.degrees)
      if (!deg.ok()) os << " " << deg.n;
    tr.witness = os.str();
    tr.fixtures.push_back(Fixture{"K1", k1});
    tr.fixtures.push_back(Fixture{"K2", k2});
  }
  return tr;
}

TrialResult run_one(Suite suite, const RunConfig& cfg, int index) {
  switch (suite) {
    case Suite::Ghost: return ghost_trial(cfg, index);
    case Suite::Wedge: return wedge_trial(cfg, index);
    case Suite::Prop41: return prop41_trial(cfg, index);
    case Suite::DSquared: return dsquared_trial(cfg, index);
    case Suite::Ses: return ses_trial(cfg, index);
    case Suite::Mv: return mv_trial(cfg, index);
    case Suite::All: break;
  }
  throw InternalError("run_one: not a concrete suite");
}

}  // namespace

SuiteReport run_suite(Suite suite, const RunConfig& cfg) {
  if (suite == Suite::All) throw InputError("run_suite needs a concrete suite");
  validate(cfg);
  SuiteReport report;
  report.suite = suite;
  report.base_seed = cfg.seed;
  report.trials.resize(std::size_t(cfg.trials));
  auto started = std::chrono::steady_clock::now();
  parallel_for(std::size_t(cfg.trials), cfg.jobs,
               [&](std::size_t i) { report.trials[i] = run_one(suite, cfg, int(i)); });
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<SuiteReport> verify_theorems(const RunConfig& cfg) {
  validate(cfg);
  std::vector<SuiteReport> out;
  if (cfg.suite == Suite::All) {
    for (Suite s : {Suite::Ghost, Suite::Wedge, Suite::Prop41, Suite::DSquared, Suite::Ses,
                    Suite::Mv})
      out.push_back(run_suite(s, cfg));
  } else {
    out.push_back(run_suite(cfg.suite, cfg));
  }
  return out;
}

}  // namespace bihochster
