#pragma once

#include <cstddef>
#include <vector>

#include "asymk/arith.hpp"
#include "asymk/errors.hpp"

namespace asymk {

// U * M = H with U unimodular and H in row Hermite normal form: echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivotColumns;
};

HermiteForm rowHermite(const IntMatrix& m);

// U * M * W = S with S diagonal, s_1 | s_2 | ... and U, W unimodular.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix W;
  IntVector invariants;  // nonzero diagonal entries
};

SmithForm smithForm(const IntMatrix& m);

// gcd of all maximal minors; 0 when the matrix is not of full row rank.
Integer maximalMinorGcd(const IntMatrix& m);

// The grading matrix with its derived data. Immutable once built.
struct MatrixConfig {
  IntMatrix entries;                 // d x n
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t rank = 0;
  Integer latticeIndex;              // m
  std::vector<Exponent> columns;     // a_1..a_n as int64 d-vectors
  std::vector<Exponent> kernelBasis; // n-d integer n-vectors, lattice basis of ker(A)
  RatVector positiveFunctional;      // y with y.a_j >= 1
  Exponent integerFunctional;        // integer multiple of y, so weights are integers
  Exponent weights;                  // integerFunctional . a_j, all >= 1

  std::size_t codim() const { return n - d; }
  std::int64_t weight(const Exponent& u) const { return dot(integerFunctional, u); }
};

MatrixConfig buildConfig(const IntMatrix& a);
MatrixConfig buildConfig(const std::vector<Exponent>& rows);

// Fourier-Motzkin test for {y : y.a_j >= 1 for all j}. On infeasibility the
// result carries a nonzero nonnegative kernel vector instead of y.
struct AcyclicityResult {
  bool acyclic = false;
  RatVector functional;
  IntVector kernelWitness;
};

AcyclicityResult testAcyclic(const IntMatrix& a);

bool isTotallyUnimodular(const IntMatrix& a, const Limits& limits = {});

// Step-3 block decomposition. With P the column permutation, V*A*P = [H | B'],
// H lower triangular. scale is |det H|: it equals m whenever some maximal
// minor has absolute value m, otherwise the blocks use the chosen minor.
struct GaleBlocks {
  IntMatrix rowChange;                      // V, d x d
  std::vector<std::size_t> columnPermutation; // column k of A*P is column perm[k] of A
  IntMatrix permuted;                       // V*A*P
  IntMatrix H;                              // d x d
  IntMatrix Bprime;                         // d x (n-d)
  IntMatrix B;                              // n x (n-d)
  IntMatrix J;                              // n x d
  IntMatrix L;                              // (n-d) x n
  Integer scale;
};

GaleBlocks galeBlocks(const MatrixConfig& config);

// Checks the five block identities exactly; returns the names of those that fail.
std::vector<std::string> checkGaleIdentities(const GaleBlocks& blocks);

}  // namespace asymk
