#include <doctest.h>

#include "asymk/asymk.hpp"
#include "oracles.hpp"

using namespace asymk;

namespace {

const std::vector<Exponent> kRows{{1, 1, 0, 0, -1}, {0, 0, 1, 1, 1}};
const std::vector<Exponent> kOrder{{1, 2}, {1, 1}, {0, 2}, {0, 1}};

RatMatrix referenceTable(long r) {
  using oracle::binomial;
  const Integer b3r2 = binomial(r + 2, 3), b3r1 = binomial(r + 1, 3), b3r = binomial(r, 3);
  const Integer b2r1 = binomial(r + 1, 2), b2r = binomial(r, 2);
  const std::vector<std::vector<Integer>> t{
      {b3r2, b3r1, b3r1, b3r},
      {2 * b3r1, 2 * b3r1 + b2r1, 2 * b3r + b2r, 2 * b3r1},
      {2 * b3r1, 2 * b3r + b2r, 2 * b3r1 + b2r1, 2 * b3r1},
      {b3r, b3r1, b3r1, b3r2},
  };
  RatMatrix m(4, 4);
  const Integer denom = pow(Integer(r), 3);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      m(i, j) = Rational(t[i][j], denom);
      m(i, j).canonicalize();
    }
  }
  return m;
}

}  // namespace

TEST_CASE("reference carries table") {
  MatrixConfig c = buildConfig(kRows);
  AsymptoticResult k = kPolynomial(c);
  CarriesOptions opts;
  opts.order = kOrder;
  CarriesMatrix c2 = buildCarries(c, 2, opts);
  for (long r = 2; r <= 6; ++r) {
    CAPTURE(r);
    CarriesMatrix m = buildCarries(c, r, opts);
    CHECK(m.index == kOrder);
    CHECK(m.entries == referenceTable(r));
    StochasticReport rep = verifyStochastic(m, k, r == 2 ? nullptr : &c2);
    CHECK(rep.columnsSumToOne);
    CHECK(rep.stationaryHolds);
    CHECK(rep.stationary == RatVector{Rational(1, 6), Rational(1, 3), Rational(1, 3), Rational(1, 6)});
    CHECK(rep.spectrumHolds);
    REQUIRE(rep.eigen.size() == 3);
    CHECK(rep.eigen[0].nullity == 1);
    CHECK(rep.eigen[1].nullity == 2);
    CHECK(rep.eigen[2].nullity == 1);
    if (r > 2) CHECK(rep.eigenvectorsRIndependent == std::optional<bool>(true));
    CHECK(rep.allPass());
  }
}

TEST_CASE("default order is lexicographic") {
  CarriesMatrix m = buildCarries(buildConfig(kRows), 3);
  CHECK(m.index == std::vector<Exponent>{{0, 1}, {0, 2}, {1, 1}, {1, 2}});
}

TEST_CASE("semigroup law") {
  MatrixConfig c = buildConfig(kRows);
  SemigroupResult s = semigroupCheck(c, 2, 3);
  CHECK(s.equal);
  CHECK(s.mismatches.empty());
  MatrixConfig eulerian = buildConfig(std::vector<Exponent>{{1, 1, 1, 1}});
  CHECK(semigroupCheck(eulerian, 2, 2).equal);
  CHECK(semigroupCheck(eulerian, 3, 2).equal);
}

TEST_CASE("entries agree with enumeration") {
  MatrixConfig c = buildConfig(kRows);
  CarriesMatrix m = buildCarries(c, 3);
  for (std::size_t i = 0; i < m.index.size(); ++i) {
    for (std::size_t j = 0; j < m.index.size(); ++j) {
      Exponent w = sub(scale(m.index[i], 3), m.index[j]);
      Rational expected(oracle::countBox(kRows, 3, w), 27);
      expected.canonicalize();
      CHECK(m.entries(i, j) == expected);
      CHECK(cCoeff(c, 3, m.index[i], m.index[j]) == oracle::countBox(kRows, 3, w));
    }
  }
}

TEST_CASE("stride, order and hypothesis errors") {
  MatrixConfig ex1 = buildConfig(std::vector<Exponent>{{2, 1, 0}, {0, 1, 2}});
  CHECK_THROWS_AS(buildCarries(ex1, 3), Error);
  CarriesOptions off;
  off.allowOffStride = true;
  CHECK(buildCarries(ex1, 3, off).index.size() == 4);

  CarriesOptions bad;
  bad.order = std::vector<Exponent>{{1, 2}, {1, 1}, {2, 0}, {1, 0}};
  try {
    buildCarries(buildConfig(kRows), 2, bad);
    FAIL("expected InvalidInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }

  try {
    buildCarries(buildConfig(std::vector<Exponent>{{1, 1, 0}, {0, 0, 1}}), 2);
    FAIL("expected DegenerateMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMap);
  }
}

TEST_CASE("characteristic polynomial") {
  RatMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  CHECK(characteristicPolynomial(m) == std::vector<Rational>{1, -4, 3});
  RatMatrix z(3, 3);
  CHECK(characteristicPolynomial(z) == std::vector<Rational>{1, 0, 0, 0});
}
