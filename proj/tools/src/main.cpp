#include <bihochster/hochster.hpp>
#include <bihochster/io.hpp>
#include <bihochster/render.hpp>
#include <bihochster/verify.hpp>
#include <bihochster/wedge.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

namespace {

int default_jobs() {
  const char* env = std::getenv("BIHOCHSTER_JOBS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 4096) return 1;
  return int(v);
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Wall time goes to stderr so stdout stays byte stable.
void report_time(const char* label, const Timer& t) {
  std::fprintf(stderr, "%s: %.3fs\n", label, t.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bihochster;

  CLI::App app{"bigraded homology and double homology of moment-angle complexes over Z"};
  app.require_subcommand(1);

  std::string format_name = "tsv";
  int jobs = default_jobs();
  app.add_option("--format", format_name, "output format: tsv, json or md")
      ->check(CLI::IsMember({"tsv", "json", "md"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads; BIHOCHSTER_JOBS sets the default")
      ->check(CLI::PositiveNumber);

  std::string path, second_path;
  auto* cmd_homology =
      app.add_subcommand("homology", "reduced homology of every full subcomplex");
  cmd_homology->add_option("file", path, "complex file")->required();
  auto* cmd_hochster =
      app.add_subcommand("hochster", "bigraded homology of the moment-angle complex");
  cmd_hochster->add_option("file", path, "complex file")->required();
  auto* cmd_hh = app.add_subcommand("hh", "bigraded double homology");
  cmd_hh->add_option("file", path, "complex file")->required();
  auto* cmd_wedge = app.add_subcommand("wedge", "find a wedge decomposition");
  cmd_wedge->add_option("file", path, "complex file")->required();
  auto* cmd_ses = app.add_subcommand("ses-check", "exactness over a wedge decomposition");
  cmd_ses->add_option("file", path, "complex file")->required();
  auto* cmd_mv = app.add_subcommand("mv-check", "Mayer-Vietoris exactness for a pair");
  cmd_mv->add_option("first", path, "first complex file")->required();
  cmd_mv->add_option("second", second_path, "second complex file")->required();

  std::string suite_text = "all";
  std::string density_text = "7/20";
  int trials = 100;
  int max_m = 6;
  std::uint64_t seed = 0;
  auto* cmd_fuzz = app.add_subcommand("fuzz", "seeded property fuzzing");
  cmd_fuzz
      ->add_option("--suite", suite_text, "ghost, wedge, prop41, dsquared, ses, mv or all")
      ->check(CLI::IsMember({"ghost", "wedge", "prop41", "dsquared", "ses", "mv", "all"}))
      ->capture_default_str();
  cmd_fuzz->add_option("--trials", trials, "trials per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_fuzz->add_option("--seed", seed, "base seed")->capture_default_str();
  cmd_fuzz->add_option("--m", max_m, "largest vertex count to draw")
      ->check(CLI::Range(1, 10))
      ->capture_default_str();
  cmd_fuzz->add_option("--density", density_text, "face density, a fraction or decimal")
      ->capture_default_str();

  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  OutputFormat format = *format_from_name(format_name);

  try {
    if (app.got_subcommand(cmd_homology)) {
      SimplicialComplex k = read_complex_file(path);
      Timer t;
      SubcomplexHomology sweep(k, jobs);
      std::cout << render_homology_sweep(sweep, format);
      report_time("homology", t);
      return 0;
    }
    if (app.got_subcommand(cmd_hochster)) {
      SimplicialComplex k = read_complex_file(path);
      Timer t;
      BigradedTable table = hochster_table(k, jobs);
      std::cout << render_bigraded(table, format);
      report_time("hochster", t);
      return 0;
    }
    if (app.got_subcommand(cmd_hh)) {
      SimplicialComplex k = read_complex_file(path);
      Timer t;
      BigradedTable table = double_homology(k, jobs);
      std::cout << render_bigraded(table, format);
      report_time("hh", t);
      return 0;
    }
    if (app.got_subcommand(cmd_wedge)) {
      SimplicialComplex k = read_complex_file(path);
      Timer t;
      auto d = find_wedge_decomposition(k);
      std::cout << render_wedge(d, format);
      report_time("wedge", t);
      return 0;
    }
    if (app.got_subcommand(cmd_ses)) {
      SimplicialComplex k = read_complex_file(path);
      Timer t;
      auto d = find_wedge_decomposition(k);
      if (!d) throw InputError("complex is not wedge-decomposable");
      SesReport report = check_ses_all(*d);
      std::cout << render_ses(report, format);
      report_time("ses-check", t);
      return report.ok() ? 0 : 1;
    }
    if (app.got_subcommand(cmd_mv)) {
      SimplicialComplex a = read_complex_file(path);
      SimplicialComplex b = read_complex_file(second_path);
      Timer t;
      MvReport report = mayer_vietoris_report(a, b);
      std::cout << render_mv(report, format);
      report_time("mv-check", t);
      return report.ok() ? 0 : 1;
    }
    if (app.got_subcommand(cmd_fuzz)) {
      RunConfig cfg;
      cfg.suite = *suite_from_name(suite_text);
      cfg.trials = trials;
      cfg.max_vertices = max_m;
      cfg.density = Density::parse(density_text);
      cfg.seed = seed;
      cfg.jobs = jobs;
      if (max_m > 7)
        std::fprintf(stderr, "warning: m=%d draws can be slow; expect minutes per suite\n",
                     max_m);
      Timer t;
      std::vector<SuiteReport> reports = verify_theorems(cfg);
      std::cout << render_suites(reports, format);
      report_time("fuzz", t);
      for (const SuiteReport& r : reports)
        if (!r.ok()) return 1;
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
