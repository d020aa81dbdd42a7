#ifndef LSPATH_JSON_IO_HPP
#define LSPATH_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "lspath/discrete_algebra.hpp"
#include "lspath/ls_path.hpp"
#include "lspath/path_vector.hpp"
#include "lspath/poset.hpp"

namespace lsp {

using Json = nlohmann::json;

// {"elements": [...], "covers": [{"lower", "upper", "bond"}]}; bond
// defaults to 1 when omitted.
BondedPoset poset_from_json(const Json& j);
Json poset_to_json(const BondedPoset& poset);

// {"degree": r, "values": {"label": "p/q"}}
LSPath path_from_json(const BondedPoset& poset, const Json& j);
Json path_to_json(const BondedPoset& poset, const LSPath& path);

// {"values": {"label": "p/q"}}
PathVector path_vector_from_json(const BondedPoset& poset, const Json& j);
Json path_vector_to_json(const BondedPoset& poset, const PathVector& v);

// {"terms": [{"coeff": "p/q", "path": {...}}]}
AlgebraElement element_from_json(const BondedPoset& poset, const Json& j);
Json element_to_json(const BondedPoset& poset, const AlgebraElement& x);

// [{"lhs": [path, path], "rhs": [{"coeff": "p/q", "monomial": [path, path]}]}]
StraighteningTable table_from_json(const BondedPoset& poset, const Json& j);
Json table_to_json(const BondedPoset& poset, const StraighteningTable& table);

Json load_json_file(const std::string& file);

}  // namespace lsp

#endif
