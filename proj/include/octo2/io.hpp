#pragma once
/**
 * @file io.hpp
 * @brief JSON forms of algebras, matrices, involutions and sweep reports.
 *
 * Field elements are stored as literals that parse_element reads back.
 * Involution files carry their algebra, so they can be loaded on their own.
 */

#include "json.hpp"  // vendored nlohmann/json

#include "octo2/oracle.hpp"
#include "octo2/parse.hpp"

namespace octo2 {

using json = nlohmann::json;

inline json to_json(const Algebra& a) {
  json j = {{"field", a.field().to_string()}, {"dim", a.dim()}, {"alpha", a.alpha().to_string()}};
  if (a.dim() >= 4) j["beta"] = a.beta().to_string();
  if (a.dim() == 8) j["gamma"] = a.gamma().to_string();
  return j;
}

inline std::string json_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) fail(ErrorCode::ParseError, std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

inline Algebra algebra_from_json(const json& j) {
  Field k = parse_field(json_string(j, "field"));
  std::size_t dim = j.value("dim", std::size_t{8});
  Fe alpha = parse_element(k, json_string(j, "alpha"));
  std::optional<Fe> beta, gamma;
  if (dim >= 4) beta = parse_element(k, json_string(j, "beta"));
  if (dim == 8) gamma = parse_element(k, json_string(j, "gamma"));
  return Algebra::build(k, dim, alpha, beta, gamma);
}

inline json to_json(const Vec& v) {
  json j = json::array();
  for (const auto& c : v) j.push_back(c.to_string());
  return j;
}

inline Vec vec_from_json(const Field& k, const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail(ErrorCode::ParseError, "expected a list of " + std::to_string(n) + " field literals");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_string()) fail(ErrorCode::ParseError, "field literals must be strings");
    v.push_back(parse_element(k, x.get<std::string>()));
  }
  return v;
}

/// Row-major list of rows.
inline json to_json(const Matrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

inline Matrix matrix_from_json(const Field& k, const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail(ErrorCode::ParseError, "expected " + std::to_string(n) + " matrix rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(k, r, n));
  return Matrix::from_rows(k, rows, n);
}

inline json to_json(const Involution& t) {
  json fixed = json::array();
  for (std::size_t i = 0; i < t.fixed.dim(); ++i) fixed.push_back(to_json(t.fixed.rows().row(i)));
  return {{"algebra", to_json(t.algebra)},
          {"type", to_string(t.type)},
          {"param", to_json(t.param)},
          {"param_text", t.algebra.element_to_string(t.param)},
          {"fixed", fixed},
          {"matrix", to_json(t.matrix)}};
}

/// A loaded involution file: the matrix, and the construction when one is recorded.
struct LoadedInvolution {
  Algebra algebra;
  Matrix matrix;
  std::optional<Involution> construction;
};

/**
 * Reads an involution file. When type, param and fixed are present the
 * construction is redone and must reproduce the stored matrix; a bare matrix
 * must be an involutive automorphism.
 */
inline LoadedInvolution involution_from_json(const json& j) {
  if (!j.contains("algebra")) fail(ErrorCode::ParseError, "missing 'algebra'");
  Algebra a = algebra_from_json(j["algebra"]);
  const Field& k = a.field();
  if (!j.contains("matrix")) fail(ErrorCode::ParseError, "missing 'matrix'");
  Matrix m = matrix_from_json(k, j["matrix"], a.dim());
  LoadedInvolution out{a, m, std::nullopt};
  if (j.contains("type") && j.contains("param") && j.contains("fixed")) {
    std::vector<Vec> rows;
    for (const auto& r : j["fixed"]) rows.push_back(vec_from_json(k, r, a.dim()));
    Subalgebra s = make_subalgebra(a, rows);
    Vec p = vec_from_json(k, j["param"], a.dim());
    std::string type = json_string(j, "type");
    if (type != "I" && type != "II") fail(ErrorCode::ParseError, "type must be I or II");
    Involution t = type == "I" ? make_type_I(s, p) : make_type_II(s, p);
    if (t.matrix != m) fail(ErrorCode::ParseError, "stored matrix does not match the recorded construction");
    out.construction = t;
  } else {
    Matrix id = Matrix::identity(k, a.dim());
    if (m * m != id || m == id || !is_automorphism(a, m)) fail(ErrorCode::NotInvolution, "matrix is not an involutive automorphism");
  }
  return out;
}

inline json to_json(const SweepReport& r) {
  json j = {{"property", r.property}, {"domain", r.domain}, {"violations", r.violations}, {"elapsed_ms", r.elapsed_ms}};
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return j;
}

}  // namespace octo2
