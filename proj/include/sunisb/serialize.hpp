#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sunisb/errors.hpp"
#include "sunisb/fock.hpp"

namespace sunisb {

inline constexpr const char* kKetConvention = "unnormalized-monomial";

// Ket document:
//   {"N": int, "convention": "unnormalized-monomial",
//    "terms": [{"occ": [[...], ...], "num": "p", "den": "q"}, ...]}
// Terms appear in lexicographic order of `occ`, which is the ket's own
// storage order.
inline nlohmann::ordered_json ket_to_json(const Ket& psi) {
  nlohmann::ordered_json doc;
  doc["N"] = psi.rank();
  doc["convention"] = kKetConvention;
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [s, c] : psi) {
    nlohmann::ordered_json term;
    term["occ"] = s.matrix();
    term["num"] = numerator_of(c).str();
    term["den"] = denominator_of(c).str();
    doc["terms"].push_back(std::move(term));
  }
  return doc;
}

inline std::string serialize_ket(const Ket& psi) { return ket_to_json(psi).dump(2) + "\n"; }

inline Ket ket_from_json(const nlohmann::ordered_json& doc) {
  try {
    if (!doc.is_object()) throw parse_error("ket document must be an object");
    const int n = doc.at("N").get<int>();
    require_rank(n);
    if (doc.at("convention").get<std::string>() != kKetConvention)
      throw parse_error("unsupported convention '" + doc.at("convention").get<std::string>() + "'");
    Ket psi(n);
    for (const auto& term : doc.at("terms")) {
      auto rows = term.at("occ").get<std::vector<std::vector<int>>>();
      const FockState s = FockState::from_matrix(n, rows);
      const Integer den = parse_integer(term.at("den").get<std::string>());
      if (den <= 0) throw parse_error("denominator must be positive");
      const auto num_text = term.at("num").get<std::string>();
      const Rational c(parse_integer(num_text), den);
      if (c == 0) throw parse_error("zero coefficient in ket document");
      if (numerator_of(c).str() != num_text || denominator_of(c).str() != term.at("den").get<std::string>())
        throw parse_error("coefficient " + num_text + "/" + den.str() + " is not in canonical lowest terms");
      if (psi.terms().count(s)) throw parse_error("duplicate basis state in ket document");
      psi.add(s, c);
    }
    return psi;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed ket document: ") + e.what());
  } catch (const std::invalid_argument& e) {  // bad rank or occupation shape
    throw parse_error(std::string("malformed ket document: ") + e.what());
  }
}

inline Ket deserialize_ket(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("ket document is not valid JSON: ") + e.what());
  }
  return ket_from_json(doc);
}

}  // namespace sunisb
