#ifndef LIEFOL_INPUT_HPP
#define LIEFOL_INPUT_HPP

#include <fstream>
#include <json.hpp>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "lie_algebra.hpp"
#include "poly.hpp"
#include "vfield.hpp"

namespace liefol {

/// A Lie algebra by structure constants. Bracket slots listed in the file are
/// taken verbatim; an unlisted mirror (j, i) is filled with the negation, so
/// antisymmetry violations can be expressed but need not be spelled out.
struct StructureInput {
  LieAlgebra algebra;
  std::optional<QMatrix> subalgebra_rows;
};

/// A family of polynomial vector fields on P^n or on a quadric.
struct FieldsInput {
  bool quadric = false;
  std::size_t n = 0;           // ambient projective dimension
  std::optional<QMatrix> B;    // quadric form when ambient is a quadric
  bool has_param = false;
  std::vector<std::string> field_names;
  std::vector<PolyVectorField> fields;
  std::optional<std::vector<std::size_t>> sub_indices;  // subset of the fields
  std::optional<QMatrix> sub_rows;                      // combinations of the fields
};

using InputDocument = std::variant<StructureInput, FieldsInput>;

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError(where + ": rationals must be integers or \"p/q\" strings");
}

inline QMatrix json_matrix(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InputError(where + ": expected an array of rows");
  QMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols())
      throw InputError(where + ": ragged rows");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = json_rational(j[i][k], where);
  }
  return m;
}

inline StructureInput parse_structure(const nlohmann::json& j) {
  if (!j.contains("dim")) throw InputError("structure input needs \"dim\"");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& s : j.at("names")) names.push_back(s.get<std::string>());
    if (names.size() != dim) throw InputError("names count does not match dim");
  }
  StructureInput out{LieAlgebra(dim, std::move(names)), std::nullopt};
  std::set<std::pair<std::size_t, std::size_t>> listed;
  if (j.contains("brackets")) {
    for (const auto& entry : j.at("brackets")) {
      if (!entry.is_array() || entry.size() != 3)
        throw InputError("each bracket entry is [i, j, [[k, coeff], ...]]");
      const std::size_t i = entry[0].get<std::size_t>();
      const std::size_t jj = entry[1].get<std::size_t>();
      if (i >= dim || jj >= dim) throw InputError("bracket index out of range");
      std::vector<BracketTerm> terms;
      for (const auto& t : entry[2]) {
        if (!t.is_array() || t.size() != 2)
          throw InputError("bracket terms are [k, coeff] pairs");
        const std::size_t k = t[0].get<std::size_t>();
        if (k >= dim) throw InputError("bracket target index out of range");
        terms.push_back({k, json_rational(t[1], "bracket coefficient")});
      }
      out.algebra.set_bracket(i, jj, std::move(terms));
      listed.insert({i, jj});
    }
    for (const auto& [i, jj] : listed) {
      if (i == jj || listed.count({jj, i})) continue;
      auto neg = out.algebra.bracket_basis(i, jj);
      for (auto& t : neg) t.c = -t.c;
      out.algebra.set_bracket(jj, i, std::move(neg));
    }
  }
  if (j.contains("subalgebra")) {
    const auto& sub = j.at("subalgebra");
    if (!sub.is_array() || sub.empty()) throw InputError("subalgebra must be a non-empty array");
    if (sub[0].is_array()) {
      QMatrix rows = json_matrix(sub, "subalgebra");
      if (rows.cols() != dim) throw InputError("subalgebra row length does not match dim");
      out.subalgebra_rows = std::move(rows);
    } else {
      QMatrix rows(sub.size(), dim);
      for (std::size_t r = 0; r < sub.size(); ++r) {
        const std::size_t idx = sub[r].get<std::size_t>();
        if (idx >= dim) throw InputError("subalgebra index out of range");
        rows(r, idx) = 1;
      }
      out.subalgebra_rows = std::move(rows);
    }
  }
  return out;
}

inline FieldsInput parse_fields(const nlohmann::json& j) {
  FieldsInput out;
  if (!j.contains("ambient")) throw InputError("fields input needs \"ambient\"");
  const auto& amb = j.at("ambient");
  const std::string type = amb.at("type").get<std::string>();
  if (type == "projective") {
    out.n = amb.at("n").get<std::size_t>();
  } else if (type == "quadric") {
    QMatrix B = json_matrix(amb.at("B"), "ambient.B");
    if (B.rows() != B.cols()) throw InputError("quadric form must be square");
    if (B != B.transpose()) throw InputError("quadric form must be symmetric");
    if (determinant(B) == 0) throw InputError("quadric form must be invertible");
    out.n = B.rows() - 1;
    out.quadric = true;
    out.B = std::move(B);
  } else {
    throw InputError("ambient type must be \"projective\" or \"quadric\"");
  }
  if (j.contains("parameters")) {
    const auto& ps = j.at("parameters");
    if (ps.size() > 1 || (ps.size() == 1 && ps[0].get<std::string>() != "t"))
      throw InputError("only the parameter \"t\" is supported");
    out.has_param = ps.size() == 1;
  }
  if (!j.contains("fields") || !j.at("fields").is_array() || j.at("fields").empty())
    throw InputError("fields input needs a non-empty \"fields\" array");
  for (const auto& f : j.at("fields")) {
    out.field_names.push_back(f.contains("name")
                                  ? f.at("name").get<std::string>()
                                  : "X" + std::to_string(out.fields.size() + 1));
    const auto& comps = f.at("components");
    if (!comps.is_array() || comps.size() != out.n + 1)
      throw InputError("field \"" + out.field_names.back() + "\" needs exactly n+1 components");
    PolyVectorField vf;
    vf.n = out.n;
    vf.param = out.has_param;
    for (const auto& c : comps)
      vf.comps.push_back(parse_poly(c.get<std::string>(), out.n + 1, out.has_param));
    out.fields.push_back(std::move(vf));
  }
  if (j.contains("subalgebra")) {
    const auto& sub = j.at("subalgebra");
    if (!sub.is_array() || sub.empty()) throw InputError("subalgebra must be a non-empty array");
    if (sub[0].is_array()) {
      QMatrix rows = json_matrix(sub, "subalgebra");
      if (rows.cols() != out.fields.size())
        throw InputError("subalgebra rows must have one coefficient per field");
      out.sub_rows = std::move(rows);
    } else {
      std::vector<std::size_t> idx;
      for (const auto& v : sub) {
        idx.push_back(v.get<std::size_t>());
        if (idx.back() >= out.fields.size()) throw InputError("subalgebra index out of range");
      }
      out.sub_indices = std::move(idx);
    }
  }
  return out;
}

}  // namespace detail

inline InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
  try {
    if (!j.contains("kind")) throw InputError("input needs a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "structure") return detail::parse_structure(j);
    if (kind == "fields") return detail::parse_fields(j);
    throw InputError("kind must be \"structure\" or \"fields\"");
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed input in '" + path + "': " + e.what());
  }
}

}  // namespace liefol

#endif
