#pragma once

#include <cstdint>
#include <vector>

#include "asymk/arith.hpp"
#include "asymk/errors.hpp"
#include "asymk/intlat.hpp"

namespace asymk {

// P(u) = {x in [0,1]^n : A x = u}.
struct FiberPolytope {
  Exponent u;
  std::vector<RatVector> vertices;  // sorted lexicographically
  int dim = -1;
  Rational normalizedVolume;        // (n-d)! * volume in kernel-lattice coordinates
};

// Precomputes the basic column subsets of A so that many fibers of the same
// configuration can be enumerated cheaply.
class FiberEnumerator {
public:
  explicit FiberEnumerator(const MatrixConfig& config);

  FiberPolytope operator()(const Exponent& u, bool withVolume = true) const;
  int dimension(const Exponent& u) const;

private:
  struct Basis {
    std::vector<std::size_t> basic;
    std::vector<std::size_t> free;
    IntMatrix adjugate;  // adj(A_S), so A_S^{-1} = adjugate / det
    Integer det;
  };

  std::vector<std::pair<RatVector, std::uint64_t>> vertices(const Exponent& u) const;
  Rational volume(const std::vector<RatVector>& vertices, const std::vector<std::uint64_t>& tight) const;

  const MatrixConfig* config_;
  std::vector<Basis> bases_;
  std::vector<std::size_t> kernelRows_;  // coordinates where the kernel basis is invertible
  RatMatrix kernelInverse_;
};

FiberPolytope fiberPolytope(const MatrixConfig& config, const Exponent& u);
Rational normalizedVolume(const FiberPolytope& p, const MatrixConfig& config);

// normal . x <= offset
struct Halfspace {
  Exponent normal;
  std::int64_t offset = 0;
};

struct Zonotope {
  std::vector<Exponent> generators;
  std::vector<Exponent> vertices;
  std::vector<Halfspace> facets;
  std::vector<Exponent> latticePoints;
  std::vector<Exponent> interiorLatticePoints;

  bool contains(const Exponent& u) const;
  bool isInterior(const Exponent& u) const;
};

Zonotope zonotopeBuild(const MatrixConfig& config, const Limits& limits = {});

struct DegeneracyResult {
  bool degenerate = false;
  Exponent witness;
};

DegeneracyResult isDegenerate(const MatrixConfig& config, const Limits& limits = {});
DegeneracyResult isDegenerate(const MatrixConfig& config, const Zonotope& z);

// coefficients . p <= rhs
struct RatHalfspace {
  RatVector coefficients;
  Rational rhs;
};

struct RegionPolytope {
  Exponent u;
  std::vector<RatHalfspace> inequalities;
  Rational normalizedVolume;
};

// R(u) inside [0,m]^{n-d}, u in row-changed coordinates (u' = V u).
RegionPolytope regionPolytope(const GaleBlocks& blocks, const MatrixConfig& config, const Exponent& u);
Rational regionVolume(const GaleBlocks& blocks, const MatrixConfig& config, const Exponent& u);

// The fiber of V A P over u', parametrized by its last n-d coordinates and
// measured against the projected kernel lattice. Agrees with the fiber volume.
Rational liftedRegionVolume(const GaleBlocks& blocks, const MatrixConfig& config, const Exponent& u);

// Normalized volume of a bounded H-polytope in R^k with respect to Z^k.
Rational polytopeVolume(const std::vector<RatHalfspace>& inequalities, std::size_t k);

// psi_A(u): number of x in N^n with A x = u.
Integer partitionCount(const MatrixConfig& config, const Exponent& u);

}  // namespace asymk
