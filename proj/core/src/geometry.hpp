#pragma once

#include <cstdint>
#include <vector>

#include "asymk/arith.hpp"

namespace asymk::detail {

std::size_t affineDimension(const std::vector<RatVector>& points);
std::size_t affineDimension(const std::vector<RatVector>& points, const std::vector<std::size_t>& subset);

// Sum of |det| over a pulling triangulation of a full-dimensional polytope in
// R^dim. tight[v] has bit i set when vertex v lies on constraint i. Vertices
// must be sorted so that index order is lexicographic order.
Rational triangulatedVolume(const std::vector<RatVector>& coords, const std::vector<std::uint64_t>& tight, std::size_t dim);

struct VertexSet {
  std::vector<RatVector> points;
  std::vector<std::uint64_t> tight;
};

// Vertices of {x : a_i . x <= b_i}, at most 64 constraints, sorted.
VertexSet enumerateVertices(const std::vector<RatVector>& a, const RatVector& b, std::size_t dim);

}  // namespace asymk::detail
