#include "asymk/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "geometry.hpp"

namespace asymk {

namespace detail {

std::size_t affineDimension(const std::vector<RatVector>& points, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return 0;
  const RatVector& base = points[subset.front()];
  RatMatrix diffs(subset.size() - 1, base.size());
  for (std::size_t i = 1; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < base.size(); ++j) diffs(i - 1, j) = points[subset[i]][j] - base[j];
  }
  return rank(diffs);
}

std::size_t affineDimension(const std::vector<RatVector>& points) {
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return affineDimension(points, all);
}

namespace {

class Triangulator {
public:
  Triangulator(const std::vector<RatVector>& coords, const std::vector<std::uint64_t>& tight)
      : coords_(coords), tight_(tight) {}

  const std::vector<std::vector<std::size_t>>& run(const std::vector<std::size_t>& face, std::size_t dim) {
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    std::vector<std::vector<std::size_t>> simplices;
    if (dim == 0) {
      simplices.push_back({face.front()});
    } else {
      const std::size_t apex = face.front();
      std::uint64_t bits = 0;
      for (auto v : face) bits |= tight_[v];
      std::set<std::vector<std::size_t>> facets;
      for (unsigned i = 0; i < 64; ++i) {
        if (!(bits >> i & 1U)) continue;
        std::vector<std::size_t> sub;
        for (auto v : face) {
          if (tight_[v] >> i & 1U) sub.push_back(v);
        }
        if (sub.size() == face.size() || sub.size() < dim) continue;
        if (sub.front() == apex) continue;
        if (facets.count(sub)) continue;
        if (affineDimension(coords_, sub) != dim - 1) continue;
        facets.insert(sub);
      }
      for (const auto& facet : facets) {
        for (const auto& s : run(facet, dim - 1)) {
          std::vector<std::size_t> simplex{apex};
          simplex.insert(simplex.end(), s.begin(), s.end());
          simplices.push_back(std::move(simplex));
        }
      }
    }
    return memo_.emplace(face, std::move(simplices)).first->second;
  }

private:
  const std::vector<RatVector>& coords_;
  const std::vector<std::uint64_t>& tight_;
  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo_;
};

}  // namespace

Rational triangulatedVolume(const std::vector<RatVector>& coords, const std::vector<std::uint64_t>& tight, std::size_t dim) {
  if (coords.empty()) return 0;
  if (dim == 0) return 1;
  std::vector<std::size_t> all(coords.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Triangulator tri(coords, tight);
  Rational total = 0;
  for (const auto& s : tri.run(all, dim)) {
    RatMatrix m(dim, dim);
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) m(i - 1, j) = coords[s[i]][j] - coords[s[0]][j];
    }
    total += abs(determinant(m));
  }
  return total;
}

VertexSet enumerateVertices(const std::vector<RatVector>& a, const RatVector& b, std::size_t dim) {
  if (a.size() > 64) throw Error(ErrorKind::SizeLimit, "more than 64 inequalities in vertex enumeration");
  std::map<RatVector, std::uint64_t> found;
  auto record = [&](const RatVector& x) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational s = dot(a[i], x);
      if (s > b[i]) return;
      if (s == b[i]) mask |= std::uint64_t{1} << i;
    }
    found.emplace(x, mask);
  };
  if (dim == 0) {
    record(RatVector{});
  } else {
    forEachSubset(a.size(), dim, [&](const std::vector<std::size_t>& rows) {
      RatMatrix m(dim, dim);
      RatVector rhs(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = a[rows[i]][j];
        rhs[i] = b[rows[i]];
      }
      if (auto x = solve(m, rhs)) record(*x);
      return true;
    });
  }
  VertexSet vs;
  for (auto& [x, mask] : found) {
    vs.points.push_back(x);
    vs.tight.push_back(mask);
  }
  return vs;
}

}  // namespace detail

FiberEnumerator::FiberEnumerator(const MatrixConfig& config) : config_(&config) {
  const std::size_t d = config.d;
  const std::size_t n = config.n;
  forEachSubset(n, d, [&](const std::vector<std::size_t>& cols) {
    IntMatrix sub = selectColumns(config.entries, cols);
    Integer det = determinant(sub);
    if (det == 0) return true;
    RatMatrix sr = toRational(sub);
    Basis b{cols, {}, IntMatrix(d, d), det};
    for (std::size_t j = 0; j < d; ++j) {
      RatVector e(d, Rational(0));
      e[j] = 1;
      RatVector x = *solve(sr, e);
      for (std::size_t i = 0; i < d; ++i) {
        Rational v = x[i] * det;
        b.adjugate(i, j) = v.get_num();
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(cols.begin(), cols.end(), j) == cols.end()) b.free.push_back(j);
    }
    bases_.push_back(std::move(b));
    return true;
  });

  const std::size_t k = n - d;
  if (k > 0) {
    forEachSubset(n, k, [&](const std::vector<std::size_t>& rows) {
      RatMatrix sq(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sq(i, j) = Rational(static_cast<long>(config.kernelBasis[j][rows[i]]));
      }
      if (determinant(sq) == 0) return true;
      kernelRows_ = rows;
      kernelInverse_ = RatMatrix(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        RatVector e(k, Rational(0));
        e[j] = 1;
        RatVector x = *solve(sq, e);
        for (std::size_t i = 0; i < k; ++i) kernelInverse_(i, j) = x[i];
      }
      return false;
    });
  }
}

std::vector<std::pair<RatVector, std::uint64_t>> FiberEnumerator::vertices(const Exponent& u) const {
  const MatrixConfig& cfg = *config_;
  const std::size_t d = cfg.d;
  const std::size_t n = cfg.n;
  std::map<RatVector, std::uint64_t> found;
  for (const auto& b : bases_) {
    const std::size_t k = b.free.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Exponent rhs = u;
      for (std::size_t t = 0; t < k; ++t) {
        if (mask >> t & 1U) {
          const Exponent& col = cfg.columns[b.free[t]];
          for (std::size_t i = 0; i < d; ++i) rhs[i] -= col[i];
        }
      }
      RatVector x(n, Rational(0));
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) {
        Integer num = 0;
        for (std::size_t j = 0; j < d; ++j) num += b.adjugate(i, j) * static_cast<long>(rhs[j]);
        if (b.det > 0 ? (num < 0 || num > b.det) : (num > 0 || num < b.det)) ok = false;
        else x[b.basic[i]] = Rational(num, b.det);
      }
      if (!ok) continue;
      for (std::size_t t = 0; t < k; ++t) x[b.free[t]] = (mask >> t & 1U) ? 1 : 0;
      for (auto& q : x) q.canonicalize();
      std::uint64_t tight = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == 0) tight |= std::uint64_t{1} << (2 * j);
        if (x[j] == 1) tight |= std::uint64_t{1} << (2 * j + 1);
      }
      found.emplace(std::move(x), tight);
    }
  }
  return {found.begin(), found.end()};
}

Rational FiberEnumerator::volume(const std::vector<RatVector>& vertices, const std::vector<std::uint64_t>& tight) const {
  const std::size_t k = config_->n - config_->d;
  if (k == 0) return vertices.empty() ? Rational(0) : Rational(1);
  std::vector<RatVector> coords;
  coords.reserve(vertices.size());
  for (const auto& x : vertices) {
    RatVector diff(k);
    for (std::size_t i = 0; i < k; ++i) diff[i] = x[kernelRows_[i]] - vertices.front()[kernelRows_[i]];
    coords.push_back(kernelInverse_ * diff);
  }
  return detail::triangulatedVolume(coords, tight, k);
}

FiberPolytope FiberEnumerator::operator()(const Exponent& u, bool withVolume) const {
  FiberPolytope p;
  p.u = u;
  auto verts = vertices(u);
  std::vector<std::uint64_t> tight;
  for (auto& [x, t] : verts) {
    p.vertices.push_back(x);
    tight.push_back(t);
  }
  p.dim = p.vertices.empty() ? -1 : static_cast<int>(detail::affineDimension(p.vertices));
  p.normalizedVolume = 0;
  const std::size_t k = config_->n - config_->d;
  if (withVolume && p.dim == static_cast<int>(k)) p.normalizedVolume = volume(p.vertices, tight);
  return p;
}

int FiberEnumerator::dimension(const Exponent& u) const {
  auto verts = vertices(u);
  if (verts.empty()) return -1;
  std::vector<RatVector> pts;
  for (auto& [x, t] : verts) pts.push_back(x);
  return static_cast<int>(detail::affineDimension(pts));
}

FiberPolytope fiberPolytope(const MatrixConfig& config, const Exponent& u) { return FiberEnumerator(config)(u); }

Rational normalizedVolume(const FiberPolytope& p, const MatrixConfig& config) {
  if (p.dim != static_cast<int>(config.n - config.d)) return 0;
  return fiberPolytope(config, p.u).normalizedVolume;
}

bool Zonotope::contains(const Exponent& u) const {
  for (const auto& f : facets) {
    if (dot(f.normal, u) > f.offset) return false;
  }
  return true;
}

bool Zonotope::isInterior(const Exponent& u) const {
  for (const auto& f : facets) {
    if (dot(f.normal, u) >= f.offset) return false;
  }
  return true;
}

Zonotope zonotopeBuild(const MatrixConfig& config, const Limits& limits) {
  const std::size_t d = config.d;
  const std::size_t n = config.n;
  Zonotope z;
  z.generators = config.columns;

  std::set<Exponent> normals;
  forEachSubset(n, d - 1, [&](const std::vector<std::size_t>& cols) {
    IntMatrix m = selectColumns(config.entries, cols);
    IntVector c(d);
    for (std::size_t skip = 0; skip < d; ++skip) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t i = 0, r = 0; i < d; ++i) {
        if (i == skip) continue;
        for (std::size_t j = 0; j + 1 < d; ++j) minor(r, j) = m(i, j);
        ++r;
      }
      c[skip] = (skip % 2 ? -1 : 1) * determinant(minor);
    }
    Integer g = gcd(c);
    if (g == 0) return true;
    Exponent normal(d);
    for (std::size_t i = 0; i < d; ++i) normal[i] = toInt64(Integer(c[i] / g));
    auto firstNonzero = std::find_if(normal.begin(), normal.end(), [](std::int64_t x) { return x != 0; });
    if (*firstNonzero < 0) normal = scale(normal, -1);
    normals.insert(normal);
    return true;
  });
  for (const auto& c : normals) {
    std::int64_t upper = 0, lower = 0;
    for (const auto& a : config.columns) {
      std::int64_t s = dot(c, a);
      (s > 0 ? upper : lower) += s;
    }
    z.facets.push_back({c, upper});
    z.facets.push_back({scale(c, -1), -lower});
  }
  std::sort(z.facets.begin(), z.facets.end(),
            [](const Halfspace& x, const Halfspace& y) { return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset); });

  if (n > 24) throw Error(ErrorKind::SizeLimit, "too many generators for zonotope vertex enumeration");
  std::set<Exponent> candidates;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Exponent p(d, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1U) p = add(p, config.columns[j]);
    }
    candidates.insert(std::move(p));
  }
  for (const auto& p : candidates) {
    std::vector<Exponent> tightNormals;
    for (const auto& f : z.facets) {
      if (dot(f.normal, p) == f.offset) tightNormals.push_back(f.normal);
    }
    if (!tightNormals.empty() && rank(fromInt64Rows(tightNormals)) == d) z.vertices.push_back(p);
  }

  Exponent lo(d, 0), hi(d, 0);
  for (const auto& a : config.columns) {
    for (std::size_t i = 0; i < d; ++i) (a[i] > 0 ? hi[i] : lo[i]) += a[i];
  }
  Integer boxSize = 1;
  for (std::size_t i = 0; i < d; ++i) boxSize *= Integer(static_cast<long>(hi[i] - lo[i] + 1));
  if (boxSize > Integer(static_cast<unsigned long>(limits.latticeBoxCap))) {
    throw Error(ErrorKind::SizeLimit, "lattice bounding box of " + boxSize.get_str() + " points exceeds the cap");
  }
  Exponent u = lo;
  while (true) {
    if (z.contains(u)) {
      z.latticePoints.push_back(u);
      if (z.isInterior(u)) z.interiorLatticePoints.push_back(u);
    }
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (u[i] < hi[i]) {
        ++u[i];
        break;
      }
      u[i] = lo[i];
      if (i == 0) return z;
    }
  }
}

DegeneracyResult isDegenerate(const MatrixConfig& config, const Zonotope& z) {
  FiberEnumerator fibers(config);
  const int full = static_cast<int>(config.n - config.d);
  for (const auto& u : z.latticePoints) {
    if (z.isInterior(u)) continue;
    if (fibers.dimension(u) == full) return {true, u};
  }
  return {false, {}};
}

DegeneracyResult isDegenerate(const MatrixConfig& config, const Limits& limits) {
  return isDegenerate(config, zonotopeBuild(config, limits));
}

RegionPolytope regionPolytope(const GaleBlocks& blocks, const MatrixConfig& config, const Exponent& u) {
  const std::size_t d = config.d;
  const std::size_t k = config.n - d;
  const Rational m(config.latticeIndex);
  RegionPolytope region;
  region.u = u;
  for (std::size_t j = 0; j < k; ++j) {
    RatVector e(k, Rational(0));
    e[j] = -1;
    region.inequalities.push_back({e, 0});
    e[j] = 1;
    region.inequalities.push_back({e, m});
  }
  for (std::size_t i = 0; i < d; ++i) {
    RatVector b(k), nb(k);
    for (std::size_t j = 0; j < k; ++j) {
      b[j] = Rational(blocks.Bprime(i, j));
      nb[j] = -b[j];
    }
    region.inequalities.push_back({b, m * static_cast<long>(u[i])});
    region.inequalities.push_back({nb, -m * static_cast<long>(u[i] - 1)});
  }
  region.normalizedVolume = polytopeVolume(region.inequalities, k);
  return region;
}

Rational regionVolume(const GaleBlocks& blocks, const MatrixConfig& config, const Exponent& u) {
  return regionPolytope(blocks, config, u).normalizedVolume;
}

Rational liftedRegionVolume(const GaleBlocks& blocks, const MatrixConfig& config, const Exponent& u) {
  const std::size_t d = config.d;
  const std::size_t k = config.n - d;
  const Rational D(blocks.scale);
  std::vector<RatHalfspace> ineq;
  for (std::size_t j = 0; j < k; ++j) {
    RatVector e(k, Rational(0));
    e[j] = -1;
    ineq.push_back({e, 0});
    e[j] = 1;
    ineq.push_back({e, 1});
  }
  for (std::size_t i = 0; i < d; ++i) {
    Rational ju = 0;
    for (std::size_t j = 0; j < d; ++j) ju += Rational(blocks.J(i, j)) * static_cast<long>(u[j]);
    RatVector b(k), nb(k);
    for (std::size_t j = 0; j < k; ++j) {
      b[j] = Rational(blocks.B(i, j));
      nb[j] = -b[j];
    }
    ineq.push_back({b, ju});
    ineq.push_back({nb, D - ju});
  }
  return polytopeVolume(ineq, k) * Rational(config.latticeIndex) / D;
}

Rational polytopeVolume(const std::vector<RatHalfspace>& inequalities, std::size_t k) {
  std::vector<RatVector> a;
  RatVector b;
  for (const auto& h : inequalities) {
    a.push_back(h.coefficients);
    b.push_back(h.rhs);
  }
  detail::VertexSet vs = detail::enumerateVertices(a, b, k);
  if (vs.points.empty()) return 0;
  if (detail::affineDimension(vs.points) < k) return 0;
  return detail::triangulatedVolume(vs.points, vs.tight, k);
}

namespace {

struct PartitionCounter {
  const MatrixConfig& cfg;
  std::map<std::pair<std::size_t, Exponent>, Integer> memo;

  Integer count(std::size_t j, const Exponent& rem) {
    const std::int64_t w = cfg.weight(rem);
    if (w < 0) return 0;
    if (j == cfg.n) return isZero(rem) ? 1 : 0;
    auto key = std::make_pair(j, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    Exponent cur = rem;
    for (std::int64_t x = 0; x * cfg.weights[j] <= w; ++x) {
      total += count(j + 1, cur);
      cur = sub(cur, cfg.columns[j]);
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

Integer partitionCount(const MatrixConfig& config, const Exponent& u) {
  PartitionCounter pc{config, {}};
  return pc.count(0, u);
}

}  // namespace asymk
