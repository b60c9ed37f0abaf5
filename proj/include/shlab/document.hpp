#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "shlab/algebra.hpp"
#include "shlab/catalog.hpp"

namespace shlab {

// Canonical algebra document:
// {
//   "name": "d2", "size": 4, "zero": 0, "one": 1,
//   "meet": [[...], ...], "join": [[...], ...], "imp": [[...], ...],
//   "neg": [...]
// }
// Lattice axioms (including distributivity) are checked on load; imp and neg
// are only range-checked.

inline nlohmann::ordered_json algebra_to_json(const FiniteAlgebra& a) {
  const int n = a.size();
  auto table = [n](const std::vector<int>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int x = 0; x < n; ++x) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int y = 0; y < n; ++y) row.push_back(t[x * n + y]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  nlohmann::ordered_json j;
  j["name"] = a.name();
  j["size"] = n;
  j["zero"] = a.zero();
  j["one"] = a.one();
  j["meet"] = table(a.lattice().meet_table());
  j["join"] = table(a.lattice().join_table());
  j["imp"] = table(a.imp_table());
  j["neg"] = a.neg_table();
  return j;
}

inline std::string algebra_to_document(const FiniteAlgebra& a) {
  return algebra_to_json(a).dump(2) + "\n";
}

inline FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
  auto need = [&](const char* field) -> const nlohmann::json& {
    if (!j.contains(field))
      throw validation_error(std::string("document is missing '") + field + "'");
    return j.at(field);
  };
  if (!need("size").is_number_integer())
    throw validation_error("'size' must be an integer");
  const int n = j.at("size").get<int>();
  if (n < 1) throw validation_error("'size' must be positive");
  auto read_int = [&](const nlohmann::json& v, const char* what) {
    if (!v.is_number_integer())
      throw validation_error(std::string(what) + " must be an integer");
    int x = v.get<int>();
    if (x < 0 || x >= n)
      throw validation_error(std::string(what) + " index " + std::to_string(x) +
                             " out of range for size " + std::to_string(n));
    return x;
  };
  auto read_table = [&](const char* field) {
    const nlohmann::json& t = need(field);
    if (!t.is_array() || static_cast<int>(t.size()) != n)
      throw validation_error(std::string("'") + field + "' must have " +
                             std::to_string(n) + " rows");
    std::vector<int> out;
    out.reserve(n * n);
    for (const auto& row : t) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw validation_error(std::string("'") + field + "' rows must have " +
                               std::to_string(n) + " entries");
      for (const auto& v : row) out.push_back(read_int(v, field));
    }
    return out;
  };
  std::string name = need("name").is_string() ? j.at("name").get<std::string>()
                                              : throw validation_error("'name' must be a string");
  int zero = read_int(need("zero"), "zero");
  int one = read_int(need("one"), "one");
  std::vector<int> meet = read_table("meet");
  std::vector<int> join = read_table("join");
  std::vector<int> imp = read_table("imp");
  const nlohmann::json& negj = need("neg");
  if (!negj.is_array() || static_cast<int>(negj.size()) != n)
    throw validation_error("'neg' must have one entry per element");
  std::vector<int> neg;
  for (const auto& v : negj) neg.push_back(read_int(v, "neg"));
  Lattice lat(n, zero, one, std::move(meet), std::move(join));
  return FiniteAlgebra(std::move(name), std::move(lat), std::move(imp),
                       std::move(neg));
}

inline FiniteAlgebra load_algebra(const std::string& document_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document_text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("malformed document: ") + e.what());
  }
  return algebra_from_json(j);
}

inline FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra(ss.str());
}

// Resolves a --algebra argument: a built-in catalog name or a document path.
inline FiniteAlgebra resolve_algebra(const std::string& ref) {
  if (is_catalog_name(ref)) return catalog_get(ref);
  if (ref.rfind("cdp-", 0) == 0) return catalog_get(ref);  // surface bad n
  return load_algebra_file(ref);
}

}  // namespace shlab
