#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymk/arith.hpp"
#include "asymk/errors.hpp"
#include "asymk/intlat.hpp"
#include "asymk/veronese.hpp"

namespace asymk {

// C(r) = r^{d-n} [C_r(u,v)], rows u and columns v over the interior lattice
// points of Z.
struct CarriesMatrix {
  std::int64_t r = 0;
  std::vector<Exponent> index;
  RatMatrix entries;
};

struct CarriesOptions {
  std::optional<std::vector<Exponent>> order;  // must be a permutation of the interior points
  bool allowOffStride = false;                 // permit r not divisible by m
};

CarriesMatrix buildCarries(const MatrixConfig& config, std::int64_t r, const CarriesOptions& options = {},
                           const Limits& limits = {});

struct EigenCheck {
  std::size_t i = 0;               // eigenvalue r^{-i}
  Rational eigenvalue;
  bool isRoot = false;             // charpoly vanishes there
  std::size_t nullity = 0;         // dim ker(C - r^{-i} I)
  std::vector<IntVector> basis;    // primitive integer kernel basis
};

struct StochasticReport {
  std::vector<Rational> columnSums;
  bool columnsSumToOne = false;
  RatVector stationary;            // K_A coefficients / (n-d)! in index order
  bool stationaryHolds = false;
  std::vector<Rational> charpoly;  // coefficients, leading first
  std::vector<EigenCheck> eigen;
  bool spectrumHolds = false;      // every r^{-i} is a root
  std::optional<bool> eigenvectorsRIndependent;
  bool allPass() const;
};

// comparison, when supplied, is C at a second r used for the eigenvector
// independence check.
StochasticReport verifyStochastic(const CarriesMatrix& c, const AsymptoticResult& k,
                                  const CarriesMatrix* comparison = nullptr);

// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier, leading first.
std::vector<Rational> characteristicPolynomial(const RatMatrix& m);

struct SemigroupResult {
  bool equal = false;
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;  // (row, col)
  RatMatrix product;
  RatMatrix direct;
};

SemigroupResult semigroupCheck(const MatrixConfig& config, std::int64_t r1, std::int64_t r2,
                               const CarriesOptions& options = {}, const Limits& limits = {});

}  // namespace asymk
