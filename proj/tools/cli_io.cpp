#include "cli_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tsurg::cli {

namespace {

constexpr std::int64_t kMaxExponent = 4096;

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

void require_valid_generator_names(const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    if (name.empty() || !is_name_start(name[0]))
      throw InputError("invalid generator name \"" + name + "\"");
    for (char c : name)
      if (!is_name_char(c))
        throw InputError("invalid generator name \"" + name + "\"");
    std::size_t seen = 0;
    for (const std::string& other : names)
      if (other == name) ++seen;
    if (seen != 1) throw InputError("duplicate generator name \"" + name + "\"");
  }
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // No path in the message: error output stays byte-stable across runs.
    throw InputError(std::string("invalid JSON payload: ") + e.what());
  }
}

std::int64_t int_field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError("missing integer field \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw InputError("field \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t int_field_or(const json& j, const std::string& key, std::int64_t fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw InputError("field \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    // Longest generator name starting here.
    std::size_t best = 0;
    std::size_t index = 0;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const std::string& name = generators[g];
      if (name.size() > best && text.compare(pos, name.size(), name) == 0) {
        best = name.size();
        index = g;
      }
    }
    if (best == 0)
      throw InputError("unknown token at position " + std::to_string(pos) +
                       " in word \"" + text + "\"");
    pos += best;
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '\'') {
      exponent = -1;
      ++pos;
    } else if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw InputError("malformed exponent in word \"" + text + "\"");
      exponent = std::stoll(text.substr(start, pos - start));
      if (exponent > kMaxExponent || exponent < -kMaxExponent)
        throw InputError("exponent out of range in word \"" + text + "\"");
    }
    const std::int32_t letter = static_cast<std::int32_t>(index) + 1;
    for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
      out.push_back(exponent < 0 ? -letter : letter);
  }
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  std::ostringstream os;
  bool first = true;
  for (std::int32_t letter : w) {
    const std::size_t index = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    if (index >= generators.size())
      throw InputError("word references an unknown generator");
    if (!first) os << " ";
    os << generators[index];
    if (letter < 0) os << "'";
    first = false;
  }
  return os.str();
}

GroupPresentation parse_presentation(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array())
    throw InputError("expected an object with a \"generators\" array");
  GroupPresentation g;
  for (const json& name : j.at("generators")) {
    if (!name.is_string()) throw InputError("generator names must be strings");
    g.generators.push_back(name.get<std::string>());
  }
  require_valid_generator_names(g.generators);
  if (j.contains("relators")) {
    if (!j.at("relators").is_array())
      throw InputError("\"relators\" must be an array of words");
    for (const json& rel : j.at("relators")) {
      if (!rel.is_string()) throw InputError("relators must be strings");
      g.relators.push_back(parse_word(rel.get<std::string>(), g.generators));
    }
  }
  return g;
}

ExteriorPresentation parse_exterior(const json& j) {
  ExteriorPresentation ext;
  ext.group = parse_presentation(j);
  if (!j.contains("meridian") || !j.at("meridian").is_string())
    throw InputError("exterior data needs a \"meridian\" word");
  ext.meridian = parse_word(j.at("meridian").get<std::string>(), ext.group.generators);
  if (j.contains("alpha")) {
    if (!j.at("alpha").is_string()) throw InputError("\"alpha\" must be a word");
    ext.alpha = parse_word(j.at("alpha").get<std::string>(), ext.group.generators);
  }
  if (j.contains("beta")) {
    if (!j.at("beta").is_string()) throw InputError("\"beta\" must be a word");
    ext.beta = parse_word(j.at("beta").get<std::string>(), ext.group.generators);
  }
  return ext;
}

IntMatrix parse_matrix(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of matrix rows");
  std::vector<std::vector<Int>> rows;
  for (const json& row : j) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<Int> r;
    for (const json& e : row) {
      if (!e.is_number_integer()) throw InputError("matrix entries must be integers");
      r.emplace_back(static_cast<long>(e.get<std::int64_t>()));
    }
    if (!rows.empty() && r.size() != rows.front().size())
      throw InputError("matrix rows must all have the same length");
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

DehnSurgeryLink parse_link(const json& j) {
  if (!j.is_object() || !j.contains("coefficients") || !j.at("coefficients").is_array())
    throw InputError("expected an object with a \"coefficients\" array");
  DehnSurgeryLink l;
  for (const json& c : j.at("coefficients")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      throw InputError("coefficients must be [p, q] integer pairs");
    l.coefficients.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>()});
  }
  l.components = l.coefficients.size();
  if (j.contains("linking")) {
    l.linking = parse_matrix(j.at("linking"));
  } else {
    l.linking = IntMatrix(l.components, l.components);
  }
  return l;
}

json to_json(const Int& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const Int& f : g.invariant_factors()) torsion.push_back(to_json(f));
  return json{{"rank", g.free_rank()}, {"torsion", std::move(torsion)},
              {"text", g.to_string()}};
}

json to_json(const ClosedFourManifoldHomology& h) {
  return json{{"H0", to_json(h.h0)}, {"H1", to_json(h.h1)}, {"H2", to_json(h.h2)},
              {"H3", to_json(h.h3)}, {"H4", to_json(h.h4)},
              {"euler_characteristic", euler_characteristic(h)}};
}

json to_json(const SurgeryDescriptor& d) {
  return json{{"p", d.p}, {"a", d.a}, {"b", d.b}};
}

json to_json(const EmbeddingCertificate& c) {
  json out;
  out["target"] = std::string(manifold_tag(c.target));
  out["punctured_target"] =
      c.punctured_target ? json(std::string(manifold_tag(*c.punctured_target)))
                         : json(nullptr);
  out["hypotheses"] = c.hypotheses;
  return out;
}

}  // namespace tsurg::cli
