#pragma once

#include "tropideal/groebner.hpp"

#include <json.hpp>

#include <string>

namespace tropideal::io {

using nlohmann::json;

/// Parses JSON text; ParseError carries the byte position of the failure.
json parse_text(const std::string& text);

json to_json(const TropScalar& s);
TropScalar scalar_from_json(const json& j, const std::string& where);
Rational rational_from_json(const json& j, const std::string& where);

json to_json(const TropPoly& f);
TropPoly poly_from_json(const json& j);

/// Also serves VVector, which has the same type.
json to_json(const Weight& w);
Weight weight_from_json(const json& j);

json to_json(const VMatroid& m);
VMatroid vmatroid_from_json(const json& j);

json to_json(const OrdMatroid& m);
OrdMatroid ordmatroid_from_json(const json& j);

json to_json(const TruncIdeal& ideal);
TruncIdeal ideal_from_json(const json& j);

json to_json(const ClassicalPoly& g);
json to_json(const ClassicalInput& input);
ClassicalInput classical_from_json(const json& j);

json to_json(const Cell& c);
Cell cell_from_json(const json& j, int m);
json to_json(const PolyComplex& c);
PolyComplex complex_from_json(const json& j);

/// `verbose` adds the full basis lists of every fingerprint.
json to_json(const GroebnerComplex& c, bool verbose);

json to_json(const Certificate& c);
json to_json(const CompareReport& r);
json to_json(const UnivariateFactorization& f);
json to_json(const CompatibilityViolation& v);
json to_json(const ExchangeViolation& v);

}  // namespace tropideal::io
