#include <bihochster/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bihochster {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& message) {
  throw InputError(name + ":" + std::to_string(line) + ": " + message);
}

int parse_int(const std::string& token, const std::string& name, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail(name, line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) fail(name, line, "expected an integer, got '" + token + "'");
  return value;
}

SimplicialComplex parse_text(std::istream& in, const std::string& name) {
  std::string line;
  int line_no = 0;
  int m = -1;
  std::vector<Face> generators;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == '#') continue;
    if (m < 0) {
      m = parse_int(first, name, line_no);
      if (m < 1 || m > 63) fail(name, line_no, "vertex count must be between 1 and 63");
      std::string extra;
      if (tokens >> extra) fail(name, line_no, "unexpected token after the vertex count");
      continue;
    }
    Face facet;
    if (first != "-") {
      std::string token = first;
      do {
        int v = parse_int(token, name, line_no);
        if (v < 1 || v > m) fail(name, line_no, "vertex " + token + " outside 1.." + std::to_string(m));
        facet = facet.with(v);
      } while (tokens >> token);
    }
    generators.push_back(facet);
  }
  if (m < 0) fail(name, line_no, "missing vertex count line");
  return from_facets(m, generators);
}

SimplicialComplex parse_json(std::istream& in, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(name + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("facets"))
    throw InputError(name + ": want an object with \"m\" and \"facets\"");
  if (!doc["m"].is_number_integer()) throw InputError(name + ": \"m\" must be an integer");
  long long m = doc["m"].get<long long>();
  if (m < 1 || m > 63) throw InputError(name + ": vertex count must be between 1 and 63");
  if (!doc["facets"].is_array()) throw InputError(name + ": \"facets\" must be an array");
  std::vector<Face> generators;
  for (const auto& entry : doc["facets"]) {
    if (!entry.is_array()) throw InputError(name + ": each facet must be an array of vertices");
    Face facet;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) throw InputError(name + ": vertices must be integers");
      long long vertex = v.get<long long>();
      if (vertex < 1 || vertex > m)
        throw InputError(name + ": vertex " + std::to_string(vertex) + " outside 1.." +
                         std::to_string(m));
      facet = facet.with(int(vertex));
    }
    generators.push_back(facet);
  }
  return from_facets(int(m), generators);
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in, const std::string& name) {
  // Sniff the first significant character; '{' selects JSON.
  char c;
  while (in.get(c)) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    in.unget();
    if (c == '{') return parse_json(in, name);
    return parse_text(in, name);
  }
  throw InputError(name + ": empty input");
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_complex(in, path);
}

std::string to_cplx(const SimplicialComplex& k) {
  std::ostringstream os;
  os << k.vertex_count() << "\n";
  for (Face f : facets(k)) {
    if (f.empty()) {
      os << "-\n";
      continue;
    }
    bool first = true;
    for (int v : f.vertices()) {
      if (!first) os << ' ';
      first = false;
      os << v;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_json_string(const SimplicialComplex& k) {
  nlohmann::json doc;
  doc["m"] = k.vertex_count();
  auto& list = doc["facets"] = nlohmann::json::array();
  for (Face f : facets(k)) list.push_back(f.vertices());
  return doc.dump();
}

}  // namespace bihochster
