#include "gehrhart/serialize.hpp"

#include "gehrhart/errors.hpp"

namespace gehrhart {

using nlohmann::json;

namespace {

const json& expect_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

std::int64_t small_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& tuple(const json& entry, std::size_t size) {
  if (!entry.is_array() || entry.size() != size) {
    throw ParseError("expected a term of length " + std::to_string(size) + ", got " + entry.dump());
  }
  return entry;
}

}  // namespace

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? mpz_class(std::to_string(j.get<std::uint64_t>()))
                                  : mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    mpz_class out;
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    const bool digits = s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
    if (!digits || out.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
      throw ParseError("not a decimal integer: \"" + s + "\"");
    }
    return out;
  }
  throw ParseError("expected an integer or decimal string, got " + j.dump());
}

json to_json(const LaurentQ& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.get_str()}));
  return out;
}

json to_json(const PolyTQ& p) {
  json out = json::array();
  for (const auto& [k, coeff] : p.coeffs()) {
    for (const auto& [e, c] : coeff.terms()) out.push_back(json::array({k, e, c.get_str()}));
  }
  return out;
}

json to_json(const BiPolyXY& p) {
  json out = json::array();
  for (const auto& [exps, c] : p.coeffs()) out.push_back(json::array({exps.first, exps.second, c.get_str()}));
  return out;
}

LaurentQ laurent_from_json(const json& j) {
  LaurentQ out;
  for (const auto& entry : expect_array(j, "Laurent polynomial")) {
    const auto& term = tuple(entry, 2);
    out.add_term(small_integer(term[0], "q exponent"), integer_from_json(term[1]));
  }
  return out;
}

PolyTQ poly_tq_from_json(const json& j) {
  PolyTQ out;
  for (const auto& entry : expect_array(j, "polynomial in t, q")) {
    const auto& term = tuple(entry, 3);
    out.add_term(small_integer(term[0], "t exponent"),
                 LaurentQ::monomial(integer_from_json(term[2]), small_integer(term[1], "q exponent")));
  }
  return out;
}

BiPolyXY bipoly_from_json(const json& j) {
  BiPolyXY out;
  for (const auto& entry : expect_array(j, "polynomial in x, y")) {
    const auto& term = tuple(entry, 3);
    out.add_term(static_cast<int>(small_integer(term[0], "x exponent")),
                 static_cast<int>(small_integer(term[1], "y exponent")), integer_from_json(term[2]));
  }
  return out;
}

MatroidInput parse_matroid_input(const json& doc) {
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  for (const char* key : {"d", "n", "matrix"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  }
  MatroidInput out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  const std::int64_t d = small_integer(doc["d"], "\"d\"");
  const std::int64_t n = small_integer(doc["n"], "\"n\"");
  if (d < 0 || n < 0) throw ParseError("\"d\" and \"n\" must be non-negative");
  const auto& rows = expect_array(doc["matrix"], "\"matrix\"");
  if (rows.size() != static_cast<std::size_t>(d)) {
    throw ParseError("matrix has " + std::to_string(rows.size()) + " rows, expected d = " + std::to_string(d));
  }
  linalg::IntMatrix entries;
  for (const auto& row : rows) {
    expect_array(row, "matrix row");
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("matrix row has " + std::to_string(row.size()) + " entries, expected n = " + std::to_string(n));
    }
    linalg::IntVector r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    entries.push_back(std::move(r));
  }
  out.realization = Realization(static_cast<std::size_t>(d), static_cast<std::size_t>(n), std::move(entries));
  return out;
}

MatroidInput parse_matroid_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_matroid_input(doc);
}

}  // namespace gehrhart
