#include "asymk/carries.hpp"

#include <algorithm>

#include "asymk/counts.hpp"
#include "asymk/polytope.hpp"

namespace asymk {

CarriesMatrix buildCarries(const MatrixConfig& config, std::int64_t r, const CarriesOptions& options,
                           const Limits& limits) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive");
  if (!options.allowOffStride && r % toInt64(config.latticeIndex) != 0) {
    throw Error(ErrorKind::InvalidInput,
                "r = " + std::to_string(r) + " is not a multiple of the lattice index " + config.latticeIndex.get_str());
  }
  Zonotope z = zonotopeBuild(config, limits);
  DegeneracyResult deg = isDegenerate(config, z);
  if (deg.degenerate) {
    throw Error(ErrorKind::DegenerateMap,
                "boundary lattice point " + toString(deg.witness) + " has a fiber of full dimension", deg.witness);
  }
  if (z.interiorLatticePoints.empty()) throw Error(ErrorKind::EmptyInterior, "the zonotope has no interior lattice points");

  CarriesMatrix c;
  c.r = r;
  c.index = z.interiorLatticePoints;
  if (options.order) {
    std::vector<Exponent> sorted = *options.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.index) throw Error(ErrorKind::InvalidInput, "index order is not a permutation of the interior lattice points");
    c.index = *options.order;
  }
  const std::size_t size = c.index.size();
  CountTable table(config, r, limits);
  const Integer denom = pow(Integer(static_cast<long>(r)), config.n - config.d);
  c.entries = RatMatrix(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      Rational q(table.count(c.index[i], c.index[j]), denom);
      q.canonicalize();
      c.entries(i, j) = q;
    }
  }
  return c;
}

std::vector<Rational> characteristicPolynomial(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> coeffs(n + 1, Rational(0));  // coeffs[k] multiplies x^{n-k}
  coeffs[0] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += coeffs[k - 1];
    m = am;
    RatMatrix prod = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    coeffs[k] = -trace / static_cast<long>(k);
  }
  return coeffs;
}

namespace {

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational v = 0;
  for (const auto& c : coeffs) v = v * x + c;
  return v;
}

std::vector<IntVector> eigenBasis(const RatMatrix& c, const Rational& lambda) {
  RatMatrix shifted = c;
  for (std::size_t i = 0; i < c.rows(); ++i) shifted(i, i) -= lambda;
  std::vector<IntVector> out;
  for (const auto& v : nullspace(shifted)) out.push_back(primitive(v));
  return out;
}

RatMatrix rowSpaceCanonical(const std::vector<IntVector>& basis, std::size_t cols) {
  RatMatrix m(basis.size(), cols);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(basis[i][j]);
  }
  rref(m);
  return m;
}

}  // namespace

bool StochasticReport::allPass() const {
  return columnsSumToOne && stationaryHolds && spectrumHolds && eigenvectorsRIndependent.value_or(true);
}

StochasticReport verifyStochastic(const CarriesMatrix& c, const AsymptoticResult& k, const CarriesMatrix* comparison) {
  StochasticReport rep;
  const std::size_t size = c.index.size();
  rep.columnsSumToOne = true;
  for (std::size_t j = 0; j < size; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < size; ++i) s += c.entries(i, j);
    rep.columnSums.push_back(s);
    if (s != 1) rep.columnsSumToOne = false;
  }

  const Rational fact(factorial(static_cast<unsigned>(k.nMinusD)));
  rep.stationary.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    auto it = k.perPoint.find(c.index[i]);
    rep.stationary[i] = (it == k.perPoint.end() ? Rational(0) : it->second) / fact;
  }
  RatVector image = c.entries * rep.stationary;
  rep.stationaryHolds = image == rep.stationary;

  rep.charpoly = characteristicPolynomial(c.entries);
  rep.spectrumHolds = true;
  for (std::size_t i = 0; i < k.nMinusD; ++i) {
    EigenCheck e;
    e.i = i;
    e.eigenvalue = Rational(1, pow(Integer(static_cast<long>(c.r)), i));
    e.isRoot = evaluate(rep.charpoly, e.eigenvalue) == 0;
    e.basis = eigenBasis(c.entries, e.eigenvalue);
    e.nullity = e.basis.size();
    if (!e.isRoot) rep.spectrumHolds = false;
    rep.eigen.push_back(std::move(e));
  }

  if (comparison) {
    bool same = comparison->index == c.index;
    for (std::size_t i = 0; i < k.nMinusD && same; ++i) {
      Rational other = Rational(1, pow(Integer(static_cast<long>(comparison->r)), i));
      auto b1 = rowSpaceCanonical(rep.eigen[i].basis, size);
      auto b2 = rowSpaceCanonical(eigenBasis(comparison->entries, other), size);
      if (!(b1 == b2)) same = false;
    }
    rep.eigenvectorsRIndependent = same;
  }
  return rep;
}

SemigroupResult semigroupCheck(const MatrixConfig& config, std::int64_t r1, std::int64_t r2,
                               const CarriesOptions& options, const Limits& limits) {
  if (r1 < 1 || r2 < 1) throw Error(ErrorKind::InvalidInput, "r1 and r2 must be positive");
  SemigroupResult res;
  CarriesMatrix c1 = buildCarries(config, r1, options, limits);
  CarriesMatrix c2 = buildCarries(config, r2, options, limits);
  CarriesMatrix c12 = buildCarries(config, r1 * r2, options, limits);
  res.product = c1.entries * c2.entries;
  res.direct = c12.entries;
  for (std::size_t i = 0; i < res.product.rows(); ++i) {
    for (std::size_t j = 0; j < res.product.cols(); ++j) {
      if (res.product(i, j) != res.direct(i, j)) res.mismatches.emplace_back(i, j);
    }
  }
  res.equal = res.mismatches.empty();
  return res;
}

}  // namespace asymk
