#include "io.hpp"

#include <fstream>
#include <limits>

namespace asymk::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

}  // namespace

Json toJson(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integerFromJson(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return Integer(std::to_string(u));
      return Integer(static_cast<long>(u));
    }
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.get<std::string>());
    return v;
  }
  bad("expected an integer, got " + j.dump());
}

Json toJson(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return Json{{"num", toJson(Integer(c.get_num()))}, {"den", toJson(Integer(c.get_den()))}};
}

Rational rationalFromJson(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) bad("rational needs num and den");
    Integer num = integerFromJson(j.at("num"));
    Integer den = integerFromJson(j.at("den"));
    if (den <= 0) bad("rational denominator must be positive");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return Rational(integerFromJson(j));
}

Json toJson(const Exponent& e) {
  Json a = Json::array();
  for (auto x : e) a.push_back(x);
  return a;
}

Exponent exponentFromJson(const Json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  Exponent e;
  for (const auto& x : j) e.push_back(toInt64(integerFromJson(x)));
  return e;
}

Json matrixToJson(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(toJson(a(i, j)));
    rows.push_back(row);
  }
  return Json{{"matrix", rows}};
}

IntMatrix matrixFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("matrix")) bad("matrix file must be an object with a \"matrix\" field");
  const Json& rows = j.at("matrix");
  if (!rows.is_array() || rows.empty()) bad("\"matrix\" must be a nonempty array of rows");
  const std::size_t n = rows.at(0).is_array() ? rows.at(0).size() : 0;
  if (n == 0) bad("matrix rows must be nonempty arrays");
  IntMatrix a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) bad("matrix rows must all have length " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) a(i, k) = integerFromJson(rows[i][k]);
  }
  return a;
}

Json ratMatrixToJson(const RatMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(toJson(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMatrix ratMatrixFromJson(const Json& j) {
  if (!j.is_array()) bad("expected an array of rows");
  const std::size_t cols = j.empty() ? 0 : j.at(0).size();
  RatMatrix a(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("ragged rational matrix");
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = rationalFromJson(j[i][k]);
  }
  return a;
}

Json toJson(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t = toJson(c);
    t["exp"] = toJson(e);
    terms.push_back(t);
  }
  return terms;
}

LaurentPoly polyFromJson(const Json& j, std::size_t dim) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  LaurentPoly f(dim);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("num")) bad("term needs exp and num: " + t.dump());
    Exponent e = exponentFromJson(t.at("exp"));
    if (e.size() != dim) bad("term exponent " + t.at("exp").dump() + " does not have length " + std::to_string(dim));
    Json q{{"num", t.at("num")}, {"den", t.contains("den") ? t.at("den") : Json(1)}};
    f.addTerm(e, rationalFromJson(q));
  }
  return f;
}

Json toJson(const AsymptoticExpansion& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    Json s = Json::array();
    for (auto i : t.s) s.push_back(i);
    terms.push_back(Json{{"s", s}, {"mu", toJson(t.mu)}});
  }
  return Json{{"codim", e.codim}, {"terms", terms}};
}

AsymptoticExpansion expansionFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("codim") || !j.contains("terms")) bad("expansion needs codim and terms");
  AsymptoticExpansion e;
  const Integer codim = integerFromJson(j.at("codim"));
  if (codim < 0) bad("codim must be nonnegative");
  e.codim = static_cast<std::size_t>(toInt64(codim));
  if (!j.at("terms").is_array()) bad("terms must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("s") || !t.contains("mu")) bad("expansion term needs s and mu");
    ExpansionTerm term;
    for (auto i : exponentFromJson(t.at("s"))) {
      if (i < 1) bad("expansion indices are 1-based");
      term.s.push_back(static_cast<std::size_t>(i));
    }
    term.mu = integerFromJson(t.at("mu"));
    e.terms.push_back(std::move(term));
  }
  return e;
}

Json toJson(const CarriesMatrix& c) {
  Json index = Json::array();
  for (const auto& u : c.index) index.push_back(toJson(u));
  return Json{{"r", c.r}, {"index", index}, {"entries", ratMatrixToJson(c.entries)}};
}

CarriesMatrix carriesFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("index") || !j.contains("entries")) bad("carries matrix needs index and entries");
  CarriesMatrix c;
  c.r = j.contains("r") ? toInt64(integerFromJson(j.at("r"))) : 0;
  for (const auto& u : j.at("index")) c.index.push_back(exponentFromJson(u));
  c.entries = ratMatrixFromJson(j.at("entries"));
  if (c.entries.rows() != c.index.size() || c.entries.cols() != c.index.size()) bad("carries matrix size does not match its index");
  return c;
}

Json readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace asymk::io
