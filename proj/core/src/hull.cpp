#include "asymk/hull.hpp"

#include <algorithm>
#include <set>

#include "asymk/lp.hpp"

namespace asymk {

bool LatticeHull::contains(const Exponent& w) const {
  RatVector x = toRational(w);
  for (const auto& e : equalities) {
    if (dot(e.normal, x) != e.offset) return false;
  }
  for (const auto& f : facets) {
    if (dot(f.normal, x) > f.offset) return false;
  }
  return true;
}

LatticeHull latticeHull(const std::vector<Exponent>& input, const Limits& limits) {
  LatticeHull hull;
  std::vector<Exponent> points(input.begin(), input.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return hull;
  const std::size_t D = points.front().size();
  hull.ambientDim = D;

  const RatVector p0 = toRational(points.front());
  RatMatrix diffs(points.size() - 1, D);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t j = 0; j < D; ++j) diffs(i - 1, j) = Rational(static_cast<long>(points[i][j])) - p0[j];
  }
  RatMatrix echelon = diffs;
  std::vector<std::size_t> pivots = rref(echelon);
  hull.dim = pivots.size();

  // Equalities: vectors orthogonal to every difference.
  for (auto& e : nullspace(diffs)) {
    Rational off = dot(e, p0);
    hull.equalities.push_back({std::move(e), off});
  }

  // Extreme points: those outside the hull of the others.
  std::vector<RatVector> rat;
  for (const auto& p : points) rat.push_back(toRational(p));
  if (points.size() == 1) {
    hull.extremePoints = points;
  } else {
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<RatVector> others;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (j != i) others.push_back(rat[j]);
      }
      if (!inConvexHull(others, rat[i])) hull.extremePoints.push_back(points[i]);
    }
  }

  // Facets, found in the coordinates of the pivot columns where the affine
  // hull projects injectively.
  const std::size_t k = hull.dim;
  if (k > 0) {
    std::vector<RatVector> proj;
    for (const auto& p : hull.extremePoints) {
      RatVector q(k);
      for (std::size_t i = 0; i < k; ++i) q[i] = Rational(static_cast<long>(p[pivots[i]]));
      proj.push_back(std::move(q));
    }
    std::set<std::pair<std::vector<std::string>, std::string>> seen;
    forEachSubset(proj.size(), k, [&](const std::vector<std::size_t>& subset) {
      RatMatrix m(k - 1, k);
      for (std::size_t i = 1; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i - 1, j) = proj[subset[i]][j] - proj[subset[0]][j];
      }
      auto ns = nullspace(m);
      if (ns.size() != 1) return true;
      IntVector ci = primitive(ns.front());
      RatVector c(k);
      for (std::size_t j = 0; j < k; ++j) c[j] = Rational(ci[j]);
      Rational b = dot(c, proj[subset[0]]);
      bool allLe = true, allGe = true;
      for (const auto& q : proj) {
        Rational s = dot(c, q);
        if (s > b) allLe = false;
        if (s < b) allGe = false;
      }
      if (!allLe && !allGe) return true;
      if (!allLe) {
        for (auto& x : c) x = -x;
        b = -b;
      }
      std::vector<std::string> key;
      for (const auto& x : c) key.push_back(x.get_str());
      if (!seen.emplace(key, b.get_str()).second) return true;
      RatVector normal(D, Rational(0));
      for (std::size_t j = 0; j < k; ++j) normal[pivots[j]] = c[j];
      hull.facets.push_back({std::move(normal), b});
      return true;
    });
  }

  Exponent lo = points.front(), hi = points.front();
  for (const auto& p : points) {
    for (std::size_t j = 0; j < D; ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  }
  Integer boxSize = 1;
  for (std::size_t j = 0; j < D; ++j) boxSize *= Integer(static_cast<long>(hi[j] - lo[j] + 1));
  if (boxSize > Integer(static_cast<unsigned long>(limits.latticeBoxCap))) {
    throw Error(ErrorKind::SizeLimit, "hull bounding box of " + boxSize.get_str() + " points exceeds the cap");
  }
  Exponent w = lo;
  while (true) {
    if (hull.contains(w)) hull.latticePoints.push_back(w);
    std::size_t j = D;
    bool done = true;
    while (j > 0) {
      --j;
      if (w[j] < hi[j]) {
        ++w[j];
        done = false;
        break;
      }
      w[j] = lo[j];
    }
    if (done) break;
  }
  return hull;
}

}  // namespace asymk
