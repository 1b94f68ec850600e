#pragma once

#include <vector>

#include "asymk/arith.hpp"
#include "asymk/errors.hpp"

namespace asymk {

// Convex hull of a finite lattice point set, described in ambient
// coordinates by affine-hull equalities and facet inequalities.
struct LatticeHull {
  struct Constraint {
    RatVector normal;
    Rational offset;
  };

  std::size_t ambientDim = 0;
  std::size_t dim = 0;                 // affine dimension
  std::vector<Exponent> extremePoints; // sorted
  std::vector<Constraint> equalities;  // normal . x == offset
  std::vector<Constraint> facets;      // normal . x <= offset
  std::vector<Exponent> latticePoints; // every lattice point of the hull, sorted

  bool contains(const Exponent& w) const;
};

LatticeHull latticeHull(const std::vector<Exponent>& points, const Limits& limits = {});

}  // namespace asymk
