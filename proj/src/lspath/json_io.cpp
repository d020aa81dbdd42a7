#include "lspath/json_io.hpp"

#include <fstream>

namespace lsp {

std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_from_string(const std::string& s) {
  if (s.empty()) fail(errkind::parse_error, "empty rational");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      fail(errkind::parse_error, "bad rational '" + s + "'");
  }
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(errkind::parse_error, "bad rational '" + s + "'");
  }
}

namespace {

const Json& expect(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(errkind::parse_error, std::string("missing key '") + key + "'");
  return j.at(key);
}

Rational rat_field(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  fail(errkind::parse_error, "rationals must be strings \"p/q\" or integers");
}

}  // namespace

BondedPoset poset_from_json(const Json& j) {
  std::vector<std::string> elements;
  for (const auto& e : expect(j, "elements")) {
    if (!e.is_string()) fail(errkind::parse_error, "element labels must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<CoverSpec> covers;
  for (const auto& c : expect(j, "covers")) {
    CoverSpec spec;
    spec.lower = expect(c, "lower").get<std::string>();
    spec.upper = expect(c, "upper").get<std::string>();
    if (c.contains("bond")) spec.bond = c.at("bond").get<long>();
    covers.push_back(std::move(spec));
  }
  return BondedPoset::build(elements, covers);
}

Json poset_to_json(const BondedPoset& poset) {
  Json j;
  j["elements"] = poset.labels();
  Json covers = Json::array();
  for (const auto& c : poset.cover_specs())
    covers.push_back({{"lower", c.lower}, {"upper", c.upper}, {"bond", c.bond}});
  j["covers"] = covers;
  return j;
}

LSPath path_from_json(const BondedPoset& poset, const Json& j) {
  long degree = expect(j, "degree").get<long>();
  PathVector v = path_vector_from_json(poset, j);
  if (!is_ls_path(poset, v, degree)) fail(errkind::not_an_ls_path, "path JSON fails validation");
  return LSPath{v, degree};
}

Json path_to_json(const BondedPoset& poset, const LSPath& path) {
  Json j = path_vector_to_json(poset, path.values);
  j["degree"] = path.degree;
  return j;
}

PathVector path_vector_from_json(const BondedPoset& poset, const Json& j) {
  PathVector v;
  for (const auto& [label, value] : expect(j, "values").items()) {
    Elem e = poset.index_of(label);
    v.set(e, v.at(e) + rat_field(value));
  }
  return v;
}

Json path_vector_to_json(const BondedPoset& poset, const PathVector& v) {
  Json values = Json::object();
  for (const auto& [e, q] : v.entries()) values[poset.label(e)] = rat_to_string(q);
  Json j;
  j["values"] = values;
  return j;
}

AlgebraElement element_from_json(const BondedPoset& poset, const Json& j) {
  AlgebraElement x;
  for (const auto& term : expect(j, "terms"))
    x.add_term(path_from_json(poset, expect(term, "path")), rat_field(expect(term, "coeff")));
  return x;
}

Json element_to_json(const BondedPoset& poset, const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [p, c] : x.terms())
    terms.push_back({{"coeff", rat_to_string(c)}, {"path", path_to_json(poset, p)}});
  Json j;
  j["terms"] = terms;
  return j;
}

StraighteningTable table_from_json(const BondedPoset& poset, const Json& j) {
  StraighteningTable table;
  if (!j.is_array()) fail(errkind::parse_error, "straightening table must be an array");
  for (const auto& entry : j) {
    const Json& lhs = expect(entry, "lhs");
    if (!lhs.is_array() || lhs.size() != 2)
      fail(errkind::parse_error, "lhs must hold two paths");
    TableEntry te{path_from_json(poset, lhs[0]), path_from_json(poset, lhs[1]), {}};
    for (const auto& term : expect(entry, "rhs")) {
      const Json& mon = expect(term, "monomial");
      if (!mon.is_array() || mon.size() != 2)
        fail(errkind::parse_error, "monomial must hold two paths");
      te.rhs.push_back({rat_field(expect(term, "coeff")),
                        TableMonomial{path_from_json(poset, mon[0]), path_from_json(poset, mon[1])}});
    }
    table.entries.push_back(std::move(te));
  }
  return table;
}

Json table_to_json(const BondedPoset& poset, const StraighteningTable& table) {
  Json j = Json::array();
  for (const auto& entry : table.entries) {
    Json rhs = Json::array();
    for (const auto& [c, mon] : entry.rhs)
      rhs.push_back({{"coeff", rat_to_string(c)},
                     {"monomial", Json::array({path_to_json(poset, mon.first),
                                               path_to_json(poset, mon.second)})}});
    j.push_back({{"lhs", Json::array({path_to_json(poset, entry.lhs1),
                                      path_to_json(poset, entry.lhs2)})},
                 {"rhs", rhs}});
  }
  return j;
}

Json load_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(errkind::parse_error, "cannot open '" + file + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    fail(errkind::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

}  // namespace lsp
