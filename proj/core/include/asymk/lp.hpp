#pragma once

#include <optional>

#include "asymk/arith.hpp"

namespace asymk {

// Exact phase-1 simplex (Bland's rule): a point x >= 0 with M x = b, if any.
std::optional<RatVector> findNonnegativeSolution(const RatMatrix& m, const RatVector& b);

// True iff w lies in the convex hull of the given points.
bool inConvexHull(const std::vector<RatVector>& points, const RatVector& w);

}  // namespace asymk
