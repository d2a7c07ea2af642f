#include <bihochster/render.hpp>

#include <bihochster/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace bihochster {

namespace {

std::string torsion_text(const AbelianGroup& g) {
  if (g.torsion.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const Int& d : g.torsion) {
    if (!first) os << ',';
    first = false;
    os << d;
  }
  return os.str();
}

nlohmann::json torsion_json(const AbelianGroup& g) {
  auto list = nlohmann::json::array();
  for (const Int& d : g.torsion) list.push_back(d.str());
  return list;
}

std::string hex16(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string facet_join(const SimplicialComplex& k) {
  std::ostringstream os;
  bool first = true;
  for (Face f : facets(k)) {
    if (!first) os << ';';
    first = false;
    os << f.to_string();
  }
  return os.str();
}

nlohmann::json json_complex(const SimplicialComplex& k) {
  nlohmann::json doc;
  doc["m"] = k.vertex_count();
  auto& list = doc["facets"] = nlohmann::json::array();
  for (Face f : facets(k)) list.push_back(f.vertices());
  return doc;
}

std::string kind_tag(BigradedTable::Kind kind) {
  return kind == BigradedTable::Kind::Homology ? "H" : "HH";
}

std::string sanitize(const std::string& text) {
  std::string out = text;
  for (char& c : out)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return out.empty() ? "-" : out;
}

// Comment block holding a complex in the text format; strip the leading two
// characters of each line to recover a loadable file.
void cplx_comment(std::ostream& os, const SimplicialComplex& k) {
  std::istringstream lines(to_cplx(k));
  std::string line;
  while (std::getline(lines, line)) os << "# " << line << "\n";
}

}  // namespace

std::optional<OutputFormat> format_from_name(const std::string& name) {
  if (name == "tsv") return OutputFormat::Tsv;
  if (name == "json") return OutputFormat::Json;
  if (name == "md") return OutputFormat::Markdown;
  return std::nullopt;
}

std::string render_bigraded(const BigradedTable& table, OutputFormat f) {
  std::ostringstream os;
  auto rows = table.rows();
  const bool vanishing =
      rows.empty() && table.kind() == BigradedTable::Kind::DoubleHomology;
  switch (f) {
    case OutputFormat::Tsv:
      os << "k\tl\tfree_rank\ttorsion\n";
      for (const auto& [k, l, group] : rows)
        os << k << '\t' << 2 * l << '\t' << group.free_rank << '\t' << torsion_text(group)
           << '\n';
      if (vanishing) os << "# HH = 0\n";
      break;
    case OutputFormat::Json: {
      nlohmann::json doc;
      doc["kind"] = kind_tag(table.kind());
      doc["m"] = table.vertex_count();
      auto& entries = doc["entries"] = nlohmann::json::array();
      for (const auto& [k, l, group] : rows) {
        nlohmann::json row;
        row["k"] = k;
        row["l"] = 2 * l;
        row["free_rank"] = group.free_rank;
        row["torsion"] = torsion_json(group);
        entries.push_back(row);
      }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Markdown:
      os << "| k | l | group |\n| ---: | ---: | :--- |\n";
      if (rows.empty())
        os << '\n' << (vanishing ? "HH = 0 in every bidegree." : "Zero in every bidegree.")
           << '\n';
      else
        for (const auto& [k, l, group] : rows)
          os << "| " << k << " | " << 2 * l << " | " << group.to_string() << " |\n";
      break;
  }
  return os.str();
}

std::string render_homology_sweep(const SubcomplexHomology& sweep, OutputFormat f) {
  const int m = sweep.complex().vertex_count();
  std::vector<Face> subsets;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits)
    subsets.push_back(Face(bits));
  std::sort(subsets.begin(), subsets.end());

  std::ostringstream os;
  switch (f) {
    case OutputFormat::Tsv:
      os << "J\tn\tfree_rank\ttorsion\n";
      for (Face j : subsets)
        for (int n : sweep.homology(j).support()) {
          const AbelianGroup& g = sweep.homology(j).at(n).group.structure();
          os << j.to_string() << '\t' << n << '\t' << g.free_rank << '\t'
             << torsion_text(g) << '\n';
        }
      break;
    case OutputFormat::Json: {
      nlohmann::json doc;
      doc["m"] = m;
      auto& entries = doc["entries"] = nlohmann::json::array();
      for (Face j : subsets)
        for (int n : sweep.homology(j).support()) {
          const AbelianGroup& g = sweep.homology(j).at(n).group.structure();
          nlohmann::json row;
          row["J"] = j.vertices();
          row["n"] = n;
          row["free_rank"] = g.free_rank;
          row["torsion"] = torsion_json(g);
          entries.push_back(row);
        }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Markdown:
      os << "| J | n | group |\n| :--- | ---: | :--- |\n";
      for (Face j : subsets)
        for (int n : sweep.homology(j).support())
          os << "| " << j.to_string() << " | " << n << " | "
             << sweep.homology(j).at(n).group.structure().to_string() << " |\n";
      break;
  }
  return os.str();
}

std::string render_homology(const HomologyBasis& h, OutputFormat f) {
  std::ostringstream os;
  std::vector<int> degrees = h.support();
  switch (f) {
    case OutputFormat::Tsv:
      os << "n\tfree_rank\ttorsion\n";
      for (int n : degrees) {
        const AbelianGroup& g = h.at(n).group.structure();
        os << n << '\t' << g.free_rank << '\t' << torsion_text(g) << '\n';
      }
      break;
    case OutputFormat::Json: {
      nlohmann::json doc;
      auto& groups = doc["groups"] = nlohmann::json::array();
      for (int n : degrees) {
        const AbelianGroup& g = h.at(n).group.structure();
        nlohmann::json row;
        row["n"] = n;
        row["free_rank"] = g.free_rank;
        row["torsion"] = torsion_json(g);
        groups.push_back(row);
      }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Markdown:
      os << "| n | group |\n| ---: | :--- |\n";
      if (degrees.empty())
        os << "\nTrivial in every degree.\n";
      else
        for (int n : degrees)
          os << "| " << n << " | " << h.at(n).group.structure().to_string() << " |\n";
      break;
  }
  return os.str();
}

std::string render_wedge(const std::optional<WedgeDecomposition>& d, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Tsv:
      if (!d) {
        os << "decomposable\tno\n";
      } else {
        os << "decomposable\tyes\n";
        os << "sigma\t" << d->sigma.to_string() << '\n';
        os << "K1\t" << facet_join(d->k1) << '\n';
        os << "K2\t" << facet_join(d->k2) << '\n';
        os << "L\t" << facet_join(d->l) << '\n';
      }
      break;
    case OutputFormat::Json: {
      nlohmann::json doc;
      doc["decomposable"] = bool(d);
      if (d) {
        doc["sigma"] = d->sigma.vertices();
        doc["k1"] = json_complex(d->k1);
        doc["k2"] = json_complex(d->k2);
        doc["l"] = json_complex(d->l);
      }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Markdown:
      if (!d) {
        os << "Not wedge-decomposable.\n";
      } else {
        os << "- sigma: " << d->sigma.to_string() << "\n";
        os << "- K1: " << facet_join(d->k1) << "\n";
        os << "- K2: " << facet_join(d->k2) << "\n";
        os << "- L: " << facet_join(d->l) << "\n";
      }
      break;
  }
  return os.str();
}

std::string render_ses(const SesReport& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Tsv:
      os << "checked\tfailed\n" << r.checked << '\t' << r.failures.size() << '\n';
      for (const SesFailure& fail : r.failures)
        os << "# failure J=" << fail.j.to_string() << " n=" << fail.n << '\n';
      os << "# result " << (r.ok() ? "pass" : "fail") << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::json doc;
      doc["checked"] = r.checked;
      doc["ok"] = r.ok();
      auto& failures = doc["failures"] = nlohmann::json::array();
      for (const SesFailure& fail : r.failures) {
        nlohmann::json row;
        row["j"] = fail.j.vertices();
        row["n"] = fail.n;
        failures.push_back(row);
      }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Markdown:
      os << r.checked << " checks, " << r.failures.size() << " failures.\n";
      for (const SesFailure& fail : r.failures)
        os << "- J = " << fail.j.to_string() << ", n = " << fail.n << "\n";
      break;
  }
  return os.str();
}

std::string render_mv(const MvReport& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Tsv:
      os << "n\tcomposite_zero\tmiddle_exact\tconnecting_iso\n";
      for (const MvDegree& deg : r.degrees)
        os << deg.n << '\t' << int(deg.composite_zero) << '\t' << int(deg.middle_exact) << '\t'
           << int(deg.connecting_iso) << '\n';
      os << "# result " << (r.ok() ? "pass" : "fail") << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::json doc;
      doc["ok"] = r.ok();
      auto& degrees = doc["degrees"] = nlohmann::json::array();
      for (const MvDegree& deg : r.degrees) {
        nlohmann::json row;
        row["n"] = deg.n;
        row["composite_zero"] = deg.composite_zero;
        row["middle_exact"] = deg.middle_exact;
        row["connecting_iso"] = deg.connecting_iso;
        degrees.push_back(row);
      }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Markdown:
      os << "| n | composite zero | middle exact | connecting iso |\n"
         << "| ---: | :---: | :---: | :---: |\n";
      for (const MvDegree& deg : r.degrees)
        os << "| " << deg.n << " | " << (deg.composite_zero ? "yes" : "no") << " | "
           << (deg.middle_exact ? "yes" : "no") << " | " << (deg.connecting_iso ? "yes" : "no")
           << " |\n";
      os << "\nResult: " << (r.ok() ? "pass" : "fail") << ".\n";
      break;
  }
  return os.str();
}

std::string render_suites(const std::vector<SuiteReport>& reports, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Tsv:
      os << "suite\ttrial\tseed\tfingerprint\tproperty\tstatus\twitness\n";
      for (const SuiteReport& report : reports) {
        for (const TrialResult& t : report.trials)
          os << suite_name(report.suite) << '\t' << t.index << '\t' << t.seed << '\t'
             << hex16(t.fingerprint) << '\t' << t.property << '\t'
             << (t.pass ? "pass" : "fail") << '\t' << sanitize(t.witness) << '\n';
        for (const TrialResult& t : report.trials) {
          if (t.pass) continue;
          for (const Fixture& fixture : t.fixtures) {
            os << "# repro suite " << suite_name(report.suite) << " trial " << t.index << " "
               << fixture.label << ":\n";
            cplx_comment(os, fixture.complex);
          }
        }
        os << "# summary " << suite_name(report.suite) << ": passed " << report.passed()
           << " failed " << report.failed() << " seed " << report.base_seed << '\n';
      }
      break;
    case OutputFormat::Json: {
      nlohmann::json doc;
      auto& suites = doc["suites"] = nlohmann::json::array();
      for (const SuiteReport& report : reports) {
        nlohmann::json entry;
        entry["name"] = suite_name(report.suite);
        entry["seed"] = report.base_seed;
        entry["passed"] = report.passed();
        entry["failed"] = report.failed();
        auto& trials = entry["trials"] = nlohmann::json::array();
        for (const TrialResult& t : report.trials) {
          nlohmann::json row;
          row["trial"] = t.index;
          row["seed"] = t.seed;
          row["fingerprint"] = hex16(t.fingerprint);
          row["property"] = t.property;
          row["pass"] = t.pass;
          if (!t.pass) {
            row["witness"] = t.witness;
            auto& fixtures = row["fixtures"] = nlohmann::json::array();
            for (const Fixture& fixture : t.fixtures) {
              nlohmann::json fx = json_complex(fixture.complex);
              fx["label"] = fixture.label;
              fixtures.push_back(fx);
            }
          }
          trials.push_back(row);
        }
        suites.push_back(entry);
      }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Markdown:
      for (const SuiteReport& report : reports) {
        os << "## " << suite_name(report.suite) << "\n\n";
        os << report.passed() << "/" << report.trials.size() << " passed (seed "
           << report.base_seed << ").\n";
        for (const TrialResult& t : report.trials) {
          if (t.pass) continue;
          os << "\n- trial " << t.index << " seed " << t.seed << ": " << t.witness << "\n";
          for (const Fixture& fixture : t.fixtures) {
            os << "\n  " << fixture.label << ":\n\n  ```\n";
            std::istringstream lines(to_cplx(fixture.complex));
            std::string line;
            while (std::getline(lines, line)) os << "  " << line << "\n";
            os << "  ```\n";
          }
        }
        os << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace bihochster
