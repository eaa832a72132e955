#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "acaa/algebra.hpp"

namespace acaa {

/// Algebra file format:
///   { "name": str?, "field": {"type":"Q"} | {"type":"Fp","p":int}, "dim": int,
///     "basis": [str]?, "symmetry": "none"|"skew",
///     "products": [ {"left": i, "right": j, "value": {"k": "p/q", ...}} ] }
/// Omitted pairs are zero. With "skew" only left < right entries are accepted
/// and the opposite products are completed by negation.
Algebra algebra_from_json(nlohmann::json const &j);
nlohmann::ordered_json algebra_to_json(Algebra const &A);

Algebra load_algebra(std::filesystem::path const &path);
void save_algebra(Algebra const &A, std::filesystem::path const &path);

FieldSpec field_from_json(nlohmann::json const &j);
nlohmann::ordered_json field_to_json(FieldSpec f);

/// Scalar from a JSON string ("p/q") or integer.
Scalar scalar_from_json(FieldSpec f, nlohmann::json const &j, std::string const &where);

/// Rows of rational strings.
Matrix matrix_from_json(FieldSpec f, nlohmann::json const &j, std::string const &where);
nlohmann::ordered_json matrix_to_json(Matrix const &m);

} // namespace acaa
