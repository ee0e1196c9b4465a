#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gehrhart/bipoly.hpp"
#include "gehrhart/laurent.hpp"
#include "gehrhart/matroid.hpp"
#include "gehrhart/poly_tq.hpp"

namespace gehrhart {

// Polynomials are sorted arrays of exponent tuples followed by the
// coefficient as a decimal string:
//   LaurentQ  [[q_exp, "c"], ...]
//   PolyTQ    [[t_exp, q_exp, "c"], ...]
//   BiPolyXY  [[x_exp, y_exp, "c"], ...]
// Readers also accept JSON integers in the coefficient slot.

nlohmann::json to_json(const LaurentQ& p);
nlohmann::json to_json(const PolyTQ& p);
nlohmann::json to_json(const BiPolyXY& p);

LaurentQ laurent_from_json(const nlohmann::json& j);
PolyTQ poly_tq_from_json(const nlohmann::json& j);
BiPolyXY bipoly_from_json(const nlohmann::json& j);

/// {"name"?: str, "d": int, "n": int, "matrix": [[entry, ...], ...]} where
/// entries are integers or decimal strings.
struct MatroidInput {
  std::optional<std::string> name;
  Realization realization;
};

/// Throws ParseError on malformed documents, RankDeficientError when the
/// matrix lacks full row rank.
MatroidInput parse_matroid_input(const nlohmann::json& doc);
MatroidInput parse_matroid_input(const std::string& text);

/// Big integer from a JSON integer or a decimal string.
mpz_class integer_from_json(const nlohmann::json& j);

}  // namespace gehrhart
