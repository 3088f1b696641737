#include "confalg/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "toml_lite.hpp"

namespace confalg {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void check_keys(const json& table, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : table.items()) {
    if (!allowed.contains(key)) parse_fail("unknown field '" + key + "' in " + where);
  }
}

const json& require(const json& table, const std::string& key, const std::string& where) {
  if (!table.contains(key)) parse_fail("missing field '" + key + "' in " + where);
  return table.at(key);
}

std::string get_string(const json& table, const std::string& key, const std::string& where) {
  const json& v = require(table, key, where);
  if (!v.is_string()) parse_fail("field '" + key + "' in " + where + " must be a string");
  return v.get<std::string>();
}

int get_int(const json& table, const std::string& key, const std::string& where) {
  const json& v = require(table, key, where);
  if (!v.is_number_integer()) parse_fail("field '" + key + "' in " + where + " must be an integer");
  const auto value = v.get<long long>();
  if (value < -(1LL << 30) || value > (1LL << 30)) parse_fail("field '" + key + "' in " + where + " out of range");
  return static_cast<int>(value);
}

bool get_bool(const json& table, const std::string& key, const std::string& where) {
  const json& v = require(table, key, where);
  if (!v.is_boolean()) parse_fail("field '" + key + "' in " + where + " must be a boolean");
  return v.get<bool>();
}

Rational get_coeff(const json& v, const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  parse_fail("coefficient in " + where + " must be a \"p/q\" string or an integer");
}

std::size_t lookup(const GradedSpace& space, const std::string& label, const std::string& where) {
  const auto idx = space.index_of(label);
  if (!idx) parse_fail("unknown basis label '" + label + "' in " + where);
  return *idx;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

}  // namespace

GCAlgebra parse_document(std::string_view text) {
  const json doc = detail::parse_toml(text);
  check_keys(doc, {"space", "basis", "product"}, "document");

  const json& space_table = require(doc, "space", "document");
  if (!space_table.is_object()) parse_fail("[space] must be a table");
  check_keys(space_table, {"name", "dimension", "smooth", "proper", "connected", "unital", "unit"}, "[space]");

  SpaceMeta meta;
  meta.name = get_string(space_table, "name", "[space]");
  if (space_table.contains("dimension")) meta.dimension = get_int(space_table, "dimension", "[space]");
  meta.smooth = get_bool(space_table, "smooth", "[space]");
  meta.proper = get_bool(space_table, "proper", "[space]");
  meta.connected = get_bool(space_table, "connected", "[space]");
  meta.unital = get_bool(space_table, "unital", "[space]");
  if (meta.unital != space_table.contains("unit")) parse_fail("[space] unit is required exactly when unital = true");

  std::vector<BasisElement> basis;
  if (doc.contains("basis")) {
    const json& entries = doc.at("basis");
    if (!entries.is_array()) parse_fail("basis must be an array of tables");
    for (const json& e : entries) {
      check_keys(e, {"label", "degree", "weight"}, "[[basis]]");
      basis.push_back({get_string(e, "label", "[[basis]]"),
                       {get_int(e, "degree", "[[basis]]"), get_int(e, "weight", "[[basis]]"), 0}});
    }
  }
  GradedSpace space(std::move(basis));

  std::optional<std::size_t> unit;
  if (meta.unital) unit = lookup(space, get_string(space_table, "unit", "[space]"), "[space]");

  GCAlgebra::ProductTable products;
  if (doc.contains("product")) {
    const json& entries = doc.at("product");
    if (!entries.is_array()) parse_fail("product must be an array of tables");
    for (const json& p : entries) {
      check_keys(p, {"left", "right", "terms"}, "[[product]]");
      const std::string left = get_string(p, "left", "[[product]]");
      const std::string right = get_string(p, "right", "[[product]]");
      const std::string where = "[[product]] " + left + "·" + right;
      const auto key = std::make_pair(lookup(space, left, where), lookup(space, right, where));
      const json& terms = require(p, "terms", where);
      if (!terms.is_array()) parse_fail("terms in " + where + " must be an array");
      LinComb lc;
      for (const json& t : terms) {
        if (!t.is_object()) parse_fail("each term in " + where + " must be an inline table");
        check_keys(t, {"basis", "coeff"}, where);
        lc.emplace_back(lookup(space, get_string(t, "basis", where), where), get_coeff(require(t, "coeff", where), where));
      }
      if (!products.emplace(key, std::move(lc)).second) parse_fail("product " + left + "·" + right + " given twice");
    }
  }
  return GCAlgebra(std::move(space), std::move(products), std::move(meta), unit);
}

GCAlgebra load(std::string_view text) {
  GCAlgebra a = parse_document(text);
  auto diagnostics = validate(a);
  if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));
  return a;
}

GCAlgebra load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load(buffer.str());
}

std::string serialize(const GCAlgebra& a) {
  std::ostringstream out;
  const SpaceMeta& m = a.meta();
  const GradedSpace& v = a.space();
  auto flag = [](bool b) { return b ? "true" : "false"; };

  out << "[space]\n";
  out << "name = " << quoted(m.name) << "\n";
  if (m.dimension) out << "dimension = " << *m.dimension << "\n";
  out << "smooth = " << flag(m.smooth) << "\n";
  out << "proper = " << flag(m.proper) << "\n";
  out << "connected = " << flag(m.connected) << "\n";
  out << "unital = " << flag(m.unital) << "\n";
  if (a.unit()) out << "unit = " << quoted(v[*a.unit()].label) << "\n";

  for (const auto& e : v.basis()) {
    out << "\n[[basis]]\n";
    out << "label = " << quoted(e.label) << "\n";
    out << "degree = " << e.degree.coh_deg << "\n";
    out << "weight = " << e.degree.tate_weight << "\n";
  }
  for (const auto& [key, terms] : a.products()) {
    out << "\n[[product]]\n";
    out << "left = " << quoted(v[key.first].label) << "\n";
    out << "right = " << quoted(v[key.second].label) << "\n";
    out << "terms = [";
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (t) out << ", ";
      out << "{basis = " << quoted(v[terms[t].first].label) << ", coeff = " << quoted(terms[t].second.str()) << "}";
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace confalg
