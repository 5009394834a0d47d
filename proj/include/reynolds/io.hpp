#ifndef REYNOLDS_IO_HPP
#define REYNOLDS_IO_HPP

// Algebra JSON files:
//   { "field": "p=2", "dim": 2, "unit": [1, 0],
//     "sc": [[i, j, k, <scalar>], ...], "pi": [...] }
// Scalars are integers, residue lists [c0, c1, ...], or strings ("t+1", "1,1").
// Indices are 0-based; omitted sc entries are zero; "pi" and "labels" are optional.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reynolds/algebra.hpp"
#include "reynolds/error.hpp"
#include "reynolds/gf.hpp"

namespace reynolds {

/// An algebra as read from disk, with its optional symmetrizing functional.
struct AlgebraFile {
  Algebra algebra;
  std::optional<LinearFunctional> pi;
};

inline Element scalar_from_json(const FiniteField& f, const nlohmann::json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse_element(j.get<std::string>());
  if (j.is_array()) {
    std::vector<long long> coeffs;
    for (const auto& c : j) {
      if (!c.is_number_integer()) throw AlgebraError("residue list entries must be integers");
      coeffs.push_back(c.get<long long>());
    }
    return f.from_coefficients(coeffs);
  }
  throw AlgebraError("scalar must be an integer, residue list or string, got " + j.dump());
}

inline nlohmann::json scalar_to_json(const FiniteField& f, Element a) {
  if (f.degree() == 1) return a;
  nlohmann::json arr = nlohmann::json::array();
  for (auto c : f.coefficients(a)) arr.push_back(c);
  return arr;
}

inline Vector vector_from_json(const FiniteField& f, const nlohmann::json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw AlgebraError(std::string("\"") + what + "\" must be an array");
  if (j.size() != dim)
    throw AlgebraError(std::string("\"") + what + "\" has " + std::to_string(j.size()) + " entries, expected " +
                       std::to_string(dim));
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

/// Parses and validates; throws AlgebraError (or FieldError) on any problem.
inline AlgebraFile algebra_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw AlgebraError("algebra file must be a JSON object");
    for (const char* key : {"field", "dim", "unit"})
      if (!j.contains(key)) throw AlgebraError(std::string("missing key \"") + key + "\"");
    if (!j.at("field").is_string()) throw AlgebraError("\"field\" must be a field spec string");
    const FiniteField f = FiniteField::parse(j.at("field").get<std::string>());
    if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 1)
      throw AlgebraError("\"dim\" must be a positive integer");
    const auto dim = j.at("dim").get<std::size_t>();
    Vector unit = vector_from_json(f, j.at("unit"), dim, "unit");
    std::vector<StructureConstant> sc;
    if (j.contains("sc")) {
      if (!j.at("sc").is_array()) throw AlgebraError("\"sc\" must be an array");
      for (const auto& e : j.at("sc")) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_integer())
          throw AlgebraError("structure constant entry must be [i, j, k, scalar], got " + e.dump());
        for (int t = 0; t < 3; ++t)
          if (e[t].get<long long>() < 0) throw AlgebraError("negative structure constant index in " + e.dump());
        sc.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(),
                      scalar_from_json(f, e[3])});
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    AlgebraFile out{Algebra(f, dim, sc, std::move(unit), std::move(labels)), std::nullopt};
    require_valid(out.algebra);
    if (j.contains("pi") && !j.at("pi").is_null())
      out.pi = LinearFunctional{vector_from_json(f, j.at("pi"), dim, "pi")};
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("malformed algebra JSON: ") + e.what());
  }
}

inline AlgebraFile algebra_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw AlgebraError(std::string("JSON syntax error: ") + e.what());
  }
  return algebra_from_json(j);
}

inline nlohmann::json algebra_to_json(const Algebra& a, const std::optional<LinearFunctional>& pi = std::nullopt) {
  const FiniteField& f = a.field();
  nlohmann::json j;
  j["field"] = f.spec();
  j["dim"] = a.dim();
  nlohmann::json unit = nlohmann::json::array();
  for (auto u : a.unit()) unit.push_back(scalar_to_json(f, u));
  j["unit"] = unit;
  nlohmann::json sc = nlohmann::json::array();
  for (const auto& c : a.structure_constants()) sc.push_back({c.i, c.j, c.k, scalar_to_json(f, c.value)});
  j["sc"] = sc;
  if (!a.labels().empty()) j["labels"] = a.labels();
  if (pi) {
    nlohmann::json pj = nlohmann::json::array();
    for (auto c : pi->coords) pj.push_back(scalar_to_json(f, c));
    j["pi"] = pj;
  }
  return j;
}

/// Canonical file text: sorted keys, one key per line and one structure constant per line.
inline std::string algebra_json_text(const nlohmann::json& j) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : j.items()) {
    out += "  " + nlohmann::json(key).dump() + ": ";
    if (key == "sc" && !value.empty()) {
      out += "[\n";
      for (std::size_t r = 0; r < value.size(); ++r)
        out += "    " + value[r].dump() + (r + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++i < j.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace reynolds

#endif  // REYNOLDS_IO_HPP
