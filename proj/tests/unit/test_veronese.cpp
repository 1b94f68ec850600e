#include <doctest.h>

#include "asymk/asymk.hpp"
#include "oracles.hpp"

using namespace asymk;

namespace {

LaurentPoly mono(const Exponent& e, const Rational& c = 1) { return LaurentPoly::monomial(e, c); }
LaurentPoly one(std::size_t d) { return LaurentPoly::constant(d, 1); }

oracle::Poly terms(const LaurentPoly& f) { return oracle::Poly(f.terms().begin(), f.terms().end()); }

}  // namespace

TEST_CASE("both phi methods agree with enumeration") {
  for (const auto& rows : std::vector<std::vector<Exponent>>{{{2, 1, 0}, {0, 1, 2}}, {{1, 1, 0}, {0, 0, 1}}, {{1, 2, 3}}}) {
    MatrixConfig c = buildConfig(rows);
    std::vector<LaurentPoly> fs{one(c.d), mono(Exponent(c.d, 1)) - mono(Exponent(c.d, 0), Rational(2, 3))};
    fs.push_back(fs[1] * fs[1] + mono(Exponent(c.d, -1), 5));
    for (const auto& f : fs) {
      for (std::int64_t r = 1; r <= 6; ++r) {
        CAPTURE(r);
        LaurentPoly viaCount = phi(f, c, r, PhiMethod::Count);
        CHECK(viaCount == phi(f, c, r, PhiMethod::Geometric));
        CHECK(terms(viaCount) == oracle::phi(rows, terms(f), r));
      }
    }
  }
}

TEST_CASE("first example closed forms") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{2, 1, 0}, {0, 1, 2}});
  for (long r = 3; r <= 8; ++r) {
    LaurentPoly even = mono({2, 2}, r - 1) + mono({2, 1}, r - 1) + mono({1, 2}, r - 1) + mono({1, 1}, r) + mono({1, 0}) +
                       mono({0, 1}) + one(2);
    CHECK(phi(one(2), c, 2 * r) == even);
  }
  for (long r = 1; r <= 8; ++r) {
    CHECK(phi(one(2), c, 2 * r + 1) == mono({2, 2}, r) + mono({1, 1}, r) + one(2));
  }
}

TEST_CASE("second example closed forms") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{1, 1, 0}, {0, 0, 1}});
  for (long r = 2; r <= 8; ++r) {
    CHECK(phi(one(2), c, r) == mono({1, 0}, r - 1) + one(2));
    // Enumeration gives r t1 here; the limit t1 is unaffected.
    CHECK(phi(mono({1, 0}), c, r) == mono({1, 0}, r));
    CHECK(phi(mono({0, 1}), c, r) == mono({1, 1}, r - 1) + mono({0, 1}));
    CHECK(phi(mono({1, 1}), c, r) == mono({1, 1}, r));
  }
  try {
    kPolynomial(c);
    FAIL("expected DegenerateMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMap);
    CHECK(e.witness() == std::vector<std::int64_t>{1, 0});
  }
}

TEST_CASE("known K-polynomials") {
  AsymptoticResult ex1 = kPolynomial(buildConfig(std::vector<Exponent>{{2, 1, 0}, {0, 1, 2}}));
  CHECK(ex1.kPoly == (mono({2, 2}) + mono({2, 1}) + mono({1, 2}) + mono({1, 1})) * Rational(1, 2));
  CHECK(ex1.coefficientSum == 2);

  AsymptoticResult three = kPolynomial(buildConfig(std::vector<Exponent>{{1, -1, 1, 0, 0}, {0, 1, -1, 1, 0}, {0, 0, 1, -1, 1}}));
  CHECK(three.kPoly == mono({1, 0, 1}) + mono({0, 1, 0}));

  AsymptoticResult carries = kPolynomial(buildConfig(std::vector<Exponent>{{1, 1, 0, 0, -1}, {0, 0, 1, 1, 1}}));
  CHECK(carries.kPoly == mono({1, 2}) + mono({1, 1}, 2) + mono({0, 2}, 2) + mono({0, 1}));
}

TEST_CASE("Eulerian specialization") {
  for (std::size_t n = 2; n <= 6; ++n) {
    MatrixConfig c = buildConfig(std::vector<Exponent>{Exponent(n, 1)});
    AsymptoticResult k = kPolynomial(c);
    std::vector<Integer> row = oracle::eulerianRow(static_cast<int>(n) - 1);
    LaurentPoly expected(1);
    for (std::size_t j = 0; j < row.size(); ++j) expected.addTerm({static_cast<std::int64_t>(j + 1)}, Rational(row[j]));
    CHECK(k.kPoly == expected);
    CHECK(k.coefficientSum == Rational(factorial(static_cast<unsigned>(n - 1))));
  }
}

TEST_CASE("coefficient sum is m (n-d)!") {
  // A = [2 2 2]: m = 2, n - d = 2. Brute-force asymptotics give total 4.
  const std::vector<Exponent> rows{{2, 2, 2}};
  MatrixConfig c = buildConfig(rows);
  AsymptoticResult k = kPolynomial(c);
  Rational oracleSum = 0;
  for (const auto& [u, q] : k.perPoint) {
    const Rational expected = oracle::asymptoticCoefficient(rows, u, 2);
    CHECK(q == expected);
    oracleSum += expected;
  }
  CHECK(oracleSum == 4);
  CHECK(k.coefficientSum == 4);
  CHECK(k.latticeSum == 4);
  CHECK(k.statedSum == 8);
}

TEST_CASE("codimension formula on the Veronese surface") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{2, 1, 2, 0, 1, 2}, {0, 1, 1, 2, 2, 2}});
  CHECK(c.latticeIndex == 1);
  const LaurentPoly u = one(2);
  const LaurentPoly expected = mono({1, 1}, Rational(1, 2)) * (mono({1, 0}) + u) * (mono({0, 1}) + u) * (mono({1, 1}) + u) *
                               (u - mono({1, 1})) * (u - mono({2, 1})) * (u - mono({1, 2}));
  CodimResult first = codimAsymptotic(c, {3, {{{2, 3, 5}, 4}}});
  CHECK(first.limit == expected);
  CHECK(first.order == 1);
  CHECK(first.termIndices == std::vector<Integer>{4});
  CodimResult second = codimAsymptotic(c, {3, {{{1, 2, 5}, 2}, {{2, 5, 6}, 2}}});
  CHECK(second.limit == expected);
  CHECK(second.termIndices == std::vector<Integer>{2, 2});

  CHECK_THROWS_AS(codimAsymptotic(c, {3, {{{1, 2}, 1}}}), Error);
  CHECK_THROWS_AS(codimAsymptotic(c, {3, {{{1, 2, 9}, 1}}}), Error);
  CHECK_THROWS_AS(codimAsymptotic(c, {3, {{{1, 1, 2}, 1}}}), Error);
  CHECK_THROWS_AS(codimAsymptotic(c, {3, {}}), Error);
}

TEST_CASE("commutation with a dropped column") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{2, 1, 2, 0, 1, 2}, {0, 1, 1, 2, 2, 2}});
  const LaurentPoly f = mono({1, 1}) + mono({2, 0}, 3) - one(2);
  for (std::size_t i = 0; i < c.n; ++i) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c.n; ++j) {
      if (j != i) keep.push_back(j);
    }
    MatrixConfig dropped = buildConfig(selectColumns(c.entries, keep));
    const LaurentPoly factor = denominatorFactor(c, {i});
    for (std::int64_t r = 2; r <= 5; ++r) CHECK(phi(factor * f, c, r) == factor * phi(f, dropped, r));
  }
}

TEST_CASE("convergence of the first example") {
  MatrixConfig c = buildConfig(std::vector<Exponent>{{2, 1, 0}, {0, 1, 2}});
  ConvergenceReport rep = convergenceReport(one(2), c, 20);
  CHECK(rep.stride == 2);
  CHECK(rep.order == 1);
  REQUIRE(rep.limit);
  CHECK(*rep.limit == kPolynomial(c).kPoly);
  CHECK(rep.limitStable);
  CHECK(rep.limitMatchesTarget == std::optional<bool>(true));
  REQUIRE(rep.residues.size() == 1);
  CHECK(rep.residues[0].classLimit == std::optional<LaurentPoly>(mono({2, 2}, Rational(1, 2)) + mono({1, 1}, Rational(1, 2))));
  CHECK(rep.oscillates);
  CHECK(rep.caveat.find("20") != std::string::npos);
  for (const auto& s : rep.samples) CHECK(s.residual.evalAtOne() == s.phi.evalAtOne() - Rational(s.r) * 2);
}

TEST_CASE("finite-difference extrapolation") {
  std::vector<LaurentPoly> seq;
  for (long r = 3; r <= 15; r += 3) seq.push_back(mono({0}, r * r) + mono({1}, 3 * r + 1) + mono({2}, 7));
  auto lim = extrapolate(seq, 3, 2);
  REQUIRE(lim);
  CHECK(*lim == mono({0}));
  CHECK_FALSE(extrapolate({seq[0]}, 3, 2));
}
