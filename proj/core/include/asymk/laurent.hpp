#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "asymk/arith.hpp"
#include "asymk/errors.hpp"
#include "asymk/intlat.hpp"

namespace asymk {

// Finitely supported map Z^d -> Q with no stored zeros. Iteration is in
// lexicographic exponent order.
class LaurentPoly {
public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t dim) : dim_(dim) {}

  static LaurentPoly constant(std::size_t dim, const Rational& c);
  static LaurentPoly monomial(const Exponent& e, const Rational& c = 1);

  std::size_t dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  void addTerm(const Exponent& e, const Rational& c);

  Rational evalAtOne() const;
  LaurentPoly shift(const Exponent& w) const;  // t^w * F

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& other) const { return dim_ == other.dim_ && terms_ == other.terms_; }

  std::string toString() const;

private:
  std::size_t dim_ = 0;
  Terms terms_;
};

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b, const Limits& limits);

// Psi_r: keeps terms whose exponent is divisible by r and divides it.
LaurentPoly sieve(const LaurentPoly& f, std::int64_t r);

// prod_j (1 + t^{a_j} + ... + t^{(r-1) a_j}).
LaurentPoly geometricFactor(const MatrixConfig& config, std::int64_t r, const Limits& limits = {});

// Coefficients c_w of F / prod_j (1 - t^{a_j}) for every w with y.w <= bound.
struct SeriesBox {
  Rational bound;
  std::int64_t weightCut = 0;  // the same cutoff on the integer functional
  std::map<Exponent, Rational> coefficients;

  Rational coefficient(const Exponent& w) const;
};

SeriesBox seriesExpand(const LaurentPoly& f, const MatrixConfig& config, const Rational& bound, const Limits& limits = {});

// sum over subsets s of the generators of (-1)^{|s|} t^{A lcm(s)}.
LaurentPoly monomialQuotientKPoly(const MatrixConfig& config, const std::vector<Exponent>& generators);

// prod_{i in s} (1 - t^{a_i}), 0-based column indices.
LaurentPoly denominatorFactor(const MatrixConfig& config, const std::vector<std::size_t>& columns);

}  // namespace asymk
