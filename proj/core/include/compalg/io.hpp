#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "compalg/clifford.hpp"
#include "compalg/comp_matrix.hpp"
#include "compalg/crank.hpp"
#include "compalg/int_matrix.hpp"
#include "compalg/laurent.hpp"
#include "compalg/localization.hpp"
#include "compalg/poly.hpp"
#include "compalg/weyl.hpp"

namespace compalg::io {

using json = nlohmann::ordered_json;

/// Current version written into fixtures and reports.
inline constexpr int kFormatVersion = 1;

// Rationals travel as strings ("3/4"); readers also accept JSON integers.
[[nodiscard]] std::string rational_to_string(const mpq_class& q);
[[nodiscard]] mpq_class rational_from_json(const json& j);

/// "Q", "Fp:5", "Q[sqrt(2)]".
[[nodiscard]] Field parse_field(const std::string& text);

[[nodiscard]] json to_json(const Scalar& s);
[[nodiscard]] Scalar scalar_from_json(const json& j, const Field& field);

/// {"field": "Q", "a": "-1", "b": "-1"} or {"field": "Q", "form": "mat2"}.
[[nodiscard]] json to_json(const Algebra& a);
[[nodiscard]] Algebra algebra_from_json(const json& j);

/// Four coefficients in the algebra's basis.
[[nodiscard]] json to_json(const QuaternionElement& z);
[[nodiscard]] QuaternionElement element_from_json(const json& j, const Algebra& a);

/// {"algebra": ..., "rows": m, "cols": n, "entries": [[z, ...], ...]}.
/// For Mat(2,k)-form algebras "blocks" (the flattened 2m x 2n matrix) may
/// replace "entries".
[[nodiscard]] json to_json(const CompMatrix& z);
[[nodiscard]] CompMatrix comp_matrix_from_json(const json& j);

[[nodiscard]] json to_json(const FieldMatrix& m);
[[nodiscard]] FieldMatrix field_matrix_from_json(const json& j);

/// Sparse {"degree": "coeff"} map.
[[nodiscard]] json to_json(const UniPoly& p);
[[nodiscard]] UniPoly poly_from_json(const json& j);

/// {"n": 2, "terms": [{"exponent": [1, -1], "coeff": "1/2"}, ...]}.
[[nodiscard]] json to_json(const LaurentPoly& f);
[[nodiscard]] LaurentPoly laurent_from_json(const json& j);

[[nodiscard]] json to_json(const IntMatrix& m);
[[nodiscard]] IntMatrix int_matrix_from_json(const json& j);

/// {"signature": [p, q], "coeffs": {"0": c, "1": c, "12": c}}; key "0" is
/// the scalar part.
[[nodiscard]] json to_json(const Multivector& x);
[[nodiscard]] Multivector multivector_from_json(const json& j);

/// {"flavor": "BC", "n": 3} or {"flavor": "Product", "parts": [...]}.
[[nodiscard]] json to_json(const SignedPermGroup& g);
[[nodiscard]] SignedPermGroup group_from_json(const json& j);

[[nodiscard]] json to_json(const Classification& c);
[[nodiscard]] Classification classification_from_json(const json& j);

[[nodiscard]] json to_json(const BoundReport& r);
[[nodiscard]] json to_json(const GenerationReport& r);
[[nodiscard]] json to_json(const SequenceVerdict& v);
[[nodiscard]] json to_json(const LocalizationVerdict& v);
[[nodiscard]] json to_json(const ClassificationReport& r);
[[nodiscard]] json to_json(const GroupMembership& m);

/// {"error": {"code": "...", "message": "..."}}
[[nodiscard]] json error_json(const Error& e);

}  // namespace compalg::io
