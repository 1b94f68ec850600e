#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asymk/arith.hpp"
#include "asymk/counts.hpp"
#include "asymk/errors.hpp"
#include "asymk/intlat.hpp"
#include "asymk/laurent.hpp"

namespace asymk {

enum class PhiMethod {
  Count,      // sum over the dense count table C_r
  Geometric,  // sieve of F times the expanded geometric factor
};

// Phi_r[F] = Psi_r[F * prod_j (1 + t^{a_j} + ... + t^{(r-1) a_j})].
LaurentPoly phi(const LaurentPoly& f, const MatrixConfig& config, std::int64_t r, PhiMethod method = PhiMethod::Count,
                const Limits& limits = {});
LaurentPoly phi(const LaurentPoly& f, const CountTable& table);

struct AsymptoticResult {
  LaurentPoly kPoly;
  Integer m;
  std::size_t nMinusD = 0;
  Rational coefficientSum;
  Rational latticeSum;   // m * (n-d)!, the value the coefficients sum to
  Rational statedSum;    // m^{n-d} * (n-d)!
  std::map<Exponent, Rational> perPoint;
};

// K_A(t): normalized fiber volumes over the interior lattice points of Z.
// Throws DegenerateMap (with the boundary witness) if the hypothesis fails.
AsymptoticResult kPolynomial(const MatrixConfig& config, const Limits& limits = {});

struct ExpansionTerm {
  std::vector<std::size_t> s;  // 1-based column indices
  Integer mu;
};

struct AsymptoticExpansion {
  std::size_t codim = 0;
  std::vector<ExpansionTerm> terms;
};

struct CodimResult {
  LaurentPoly limit;       // lim Phi_r[F] / r^order
  LaurentPoly G;           // order! * limit
  std::size_t order = 0;   // n - codim - d
  Integer stride;          // lcm of the lattice indices involved
  std::vector<Integer> termIndices;
};

// Sum over terms of mu_s / m_s^order * K_{A_s} * prod_{i in s}(1 - t^{a_i}),
// divided by order!. When order is 0, K_{A_s} is the lattice-point
// polynomial of the half-open parallelepiped A_s [0,1)^d.
CodimResult codimAsymptotic(const MatrixConfig& config, const AsymptoticExpansion& expansion, const Limits& limits = {});

struct ConvergenceOptions {
  std::optional<std::int64_t> stride;   // default m
  std::optional<std::size_t> order;     // default n - d
  std::optional<LaurentPoly> target;    // default F(1)/(n-d)! * K_A
  std::optional<std::int64_t> residueRMax;  // default rMax
  bool checkConcavity = true;
};

struct ConvergenceSample {
  std::int64_t r = 0;
  LaurentPoly phi;
  LaurentPoly difference;  // Phi_r / r^order - target
  Rational maxNorm;
  LaurentPoly residual;    // order! * Phi_r - r^order * order! * target
  bool nonnegative = false;
  bool logConcave = false;
  bool quasiConcave = false;
};

struct ResidueDiagnostic {
  std::int64_t residue = 0;
  std::vector<std::int64_t> rs;
  std::vector<Rational> maxNorms;           // distance of Phi_r / r^order to the target
  std::optional<LaurentPoly> classLimit;    // extrapolated along this residue class
  bool agreesWithTarget = false;
};

struct ConvergenceReport {
  std::int64_t stride = 1;
  std::size_t order = 0;
  std::int64_t rMax = 0;
  std::optional<LaurentPoly> target;
  std::vector<ConvergenceSample> samples;    // r = stride, 2 stride, ... <= rMax
  std::optional<LaurentPoly> limit;          // finite-difference extrapolation along the stride
  std::int64_t limitStep = 0;
  bool limitStable = false;
  std::optional<bool> limitMatchesTarget;
  std::optional<std::int64_t> empiricalR0;   // smallest sampled r after which every sample passes
  std::string caveat;
  std::vector<ResidueDiagnostic> residues;   // r not divisible by the stride
  bool oscillates = false;
};

ConvergenceReport convergenceReport(const LaurentPoly& f, const MatrixConfig& config, std::int64_t rMax,
                                    const ConvergenceOptions& options = {}, const Limits& limits = {});

// Limit of p(r)/r^order as r -> infinity along r0, r0 + step, ... from order-th
// finite differences of consecutive samples. Returns nullopt if there are too
// few samples.
std::optional<LaurentPoly> extrapolate(const std::vector<LaurentPoly>& samples, std::int64_t step, std::size_t order);

}  // namespace asymk
