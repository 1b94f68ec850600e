#include <doctest.h>

#include "asymk/asymk.hpp"
#include "battery.hpp"

using namespace asymk;

namespace {

LaurentPoly mono(const Exponent& e, const Rational& c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace

TEST_CASE("arithmetic and normalization") {
  LaurentPoly one = LaurentPoly::constant(1, 1);
  LaurentPoly p = (one + mono({1})) * (one - mono({1}));
  CHECK(p == one - mono({2}));
  CHECK(p.size() == 2);
  CHECK(p.evalAtOne() == 0);

  LaurentPoly q(2);
  q.addTerm({1, -1}, Rational(1, 2));
  q.addTerm({1, -1}, Rational(-1, 2));
  CHECK(q.isZero());

  LaurentPoly r = mono({0, 2}, Rational(3, 4)) + mono({1, 1}, -1);
  CHECK(r.shift({-1, 1}) == mono({-1, 3}, Rational(3, 4)) + mono({0, 2}, -1));
  CHECK(r.coefficient({1, 1}) == -1);
  CHECK(r.coefficient({5, 5}) == 0);
  CHECK(r.toString() == "3/4*t2^2 - t1*t2");
}

TEST_CASE("multiply honours the term cap") {
  LaurentPoly a(1), b(1);
  for (int i = 0; i < 20; ++i) {
    a.addTerm({i}, 1);
    b.addTerm({20 * i}, 1);
  }
  Limits tight;
  tight.termCap = 100;
  try {
    multiply(a, b, tight);
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
  CHECK(multiply(a, b, Limits{}).size() == 400);
}

TEST_CASE("sieve keeps divisible exponents") {
  LaurentPoly f = mono({0, 0}, 5) + mono({2, 4}, 1) + mono({3, 6}, 7) + mono({-2, 2}, Rational(1, 3));
  CHECK(sieve(f, 1) == f);
  CHECK(sieve(f, 2) == mono({0, 0}, 5) + mono({1, 2}, 1) + mono({-1, 1}, Rational(1, 3)));
  CHECK(sieve(f, 3) == mono({0, 0}, 5) + mono({1, 2}, 7));
}

TEST_CASE("geometric factor and denominator factor") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{1, 2}});
  CHECK(geometricFactor(c, 1) == LaurentPoly::constant(1, 1));
  LaurentPoly g = geometricFactor(c, 3);
  LaurentPoly expected = (LaurentPoly::constant(1, 1) + mono({1}) + mono({2})) *
                         (LaurentPoly::constant(1, 1) + mono({2}) + mono({4}));
  CHECK(g == expected);
  // (1 - t^{a_1}) (1 - t^{a_2}) G_r = (1 - t^{r a_1}) (1 - t^{r a_2})
  LaurentPoly lhs = denominatorFactor(c, {0, 1}) * g;
  LaurentPoly rhs = (LaurentPoly::constant(1, 1) - mono({3})) * (LaurentPoly::constant(1, 1) - mono({6}));
  CHECK(lhs == rhs);
}

TEST_CASE("series expansion against partition counts") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{1, 1}});
  SeriesBox box = seriesExpand(LaurentPoly::constant(1, 1), c, 10);
  for (std::int64_t w = 0; w <= 10; ++w) CHECK(box.coefficient({w}) == w + 1);

  for (const auto& m : battery::members()) {
    CAPTURE(m.draw);
    SeriesBox b = seriesExpand(LaurentPoly::constant(m.config.d, 1), m.config, 6);
    for (const auto& [w, q] : b.coefficients) CHECK(Rational(partitionCount(m.config, w)) == q);
  }
}

TEST_CASE("series of F times the denominator gives back F") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{2, 1, 0}, {0, 1, 2}});
  LaurentPoly f = LaurentPoly::constant(2, 1) + mono({1, 0}, 3) - mono({1, 1}, Rational(1, 2));
  SeriesBox box = seriesExpand(f, c, 8);
  LaurentPoly s(2);
  for (const auto& [w, q] : box.coefficients) s.addTerm(w, q);
  LaurentPoly back = s * denominatorFactor(c, {0, 1, 2});
  for (const auto& [w, q] : back.terms()) {
    if (c.weight(w) <= box.weightCut) CHECK(q == f.coefficient(w));
  }
  for (const auto& [w, q] : f.terms()) CHECK(back.coefficient(w) == q);
}

TEST_CASE("K-polynomial of a monomial quotient") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{1, 1}});
  LaurentPoly k = monomialQuotientKPoly(c, {{1, 0}, {0, 1}});
  CHECK(k == LaurentPoly::constant(1, 1) - mono({1}, 2) + mono({2}));
  LaurentPoly k2 = monomialQuotientKPoly(c, {{2, 0}, {1, 1}});  // <x1^2, x1 x2>
  CHECK(k2 == LaurentPoly::constant(1, 1) - mono({2}, 2) + mono({3}));
}
