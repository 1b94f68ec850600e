#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "asymk/asymk.hpp"

namespace asymk::io {

using Json = nlohmann::json;  // std::map objects, so keys serialize sorted

// Integers are written as JSON numbers when they fit in int64, otherwise as
// decimal strings. Both forms are accepted on input.
Json toJson(const Integer& v);
Integer integerFromJson(const Json& j);

Json toJson(const Rational& q);  // {"num", "den"}
Rational rationalFromJson(const Json& j);

Json toJson(const Exponent& e);
Exponent exponentFromJson(const Json& j);

Json matrixToJson(const IntMatrix& a);  // {"matrix": [[...], ...]}
IntMatrix matrixFromJson(const Json& j);

Json ratMatrixToJson(const RatMatrix& a);  // rows of {"num","den"}
RatMatrix ratMatrixFromJson(const Json& j);

// [{"exp": [...], "num": n, "den": d}, ...] in lexicographic exponent order.
Json toJson(const LaurentPoly& f);
LaurentPoly polyFromJson(const Json& j, std::size_t dim);

Json toJson(const AsymptoticExpansion& e);  // {"codim", "terms": [{"s", "mu"}]}
AsymptoticExpansion expansionFromJson(const Json& j);

Json toJson(const CarriesMatrix& c);  // {"r", "index", "entries"}
CarriesMatrix carriesFromJson(const Json& j);

Json readFile(const std::string& path);

}  // namespace asymk::io
