#include "asymk/concavity.hpp"

#include <functional>
#include <numeric>

#include "asymk/hull.hpp"
#include "asymk/lp.hpp"

namespace asymk {

namespace {

// Lattice points strictly inside segment [u, v], as (w, q, a).
void forEachInterior(const Exponent& u, const Exponent& v,
                     const std::function<bool(const Exponent&, long, long)>& visit) {
  Exponent diff = sub(v, u);
  std::int64_t g = 0;
  for (auto x : diff) g = std::gcd(g, x < 0 ? -x : x);
  for (std::int64_t j = 1; j < g; ++j) {
    Exponent w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + diff[i] / g * j;
    std::int64_t c = std::gcd(j, g);
    if (!visit(w, static_cast<long>(g / c), static_cast<long>(j / c))) return;
  }
}

void crossMultiplied(ConcavityWitness& w) {
  const unsigned long q = static_cast<unsigned long>(w.q);
  const unsigned long a = static_cast<unsigned long>(w.a);
  w.lhs = pow(Integer(w.gw.get_num()), q) * pow(Integer(w.gu.get_den()), q - a) * pow(Integer(w.gv.get_den()), a);
  w.rhs = pow(Integer(w.gu.get_num()), q - a) * pow(Integer(w.gv.get_num()), a) * pow(Integer(w.gw.get_den()), q);
}

}  // namespace

bool witnessViolates(const ConcavityWitness& w) {
  if (w.kind == "log-segment") {
    ConcavityWitness c = w;
    crossMultiplied(c);
    return c.lhs < c.rhs;
  }
  if (w.kind == "segment") return w.gw < std::min(w.gu, w.gv);
  if (w.kind == "nonpositive") return w.gw <= 0;
  if (w.kind == "negative") return w.gw < 0;
  if (w.kind == "superlevel") {
    std::vector<RatVector> pts;
    for (const auto& p : w.support) pts.push_back(toRational(p));
    return inConvexHull(pts, toRational(w.w));
  }
  return false;
}

ConcavityVerdict isLogConcave(const LaurentPoly& f, const Limits& limits) {
  ConcavityVerdict verdict;
  if (f.isZero()) return verdict;
  std::vector<Exponent> support;
  for (const auto& [e, c] : f.terms()) support.push_back(e);
  LatticeHull hull = latticeHull(support, limits);
  const auto& pts = hull.latticePoints;

  for (std::size_t i = 0; i < pts.size() && verdict.holds; ++i) {
    const Rational gu = f.coefficient(pts[i]);
    if (gu <= 0) continue;
    for (std::size_t j = i + 1; j < pts.size() && verdict.holds; ++j) {
      const Rational gv = f.coefficient(pts[j]);
      if (gv <= 0) continue;
      forEachInterior(pts[i], pts[j], [&](const Exponent& w, long q, long a) {
        ConcavityWitness c{"log-segment", pts[i], w, pts[j], q, a, gu, f.coefficient(w), gv, 0, 0, {}};
        crossMultiplied(c);
        if (c.gw <= 0 || c.lhs < c.rhs) {
          verdict = {false, c};
          return false;
        }
        return true;
      });
    }
  }
  if (!verdict.holds) return verdict;
  for (const auto& w : pts) {
    Rational g = f.coefficient(w);
    if (g <= 0) {
      ConcavityWitness c;
      c.kind = "nonpositive";
      c.w = w;
      c.gw = g;
      return {false, c};
    }
  }
  return verdict;
}

ConcavityVerdict isQuasiConcave(const LaurentPoly& f, const Limits& limits) {
  ConcavityVerdict verdict;
  if (f.isZero()) return verdict;
  for (const auto& [e, c] : f.terms()) {
    if (c < 0) {
      ConcavityWitness w;
      w.kind = "negative";
      w.w = e;
      w.gw = c;
      return {false, w};
    }
  }
  std::vector<Exponent> support;
  for (const auto& [e, c] : f.terms()) support.push_back(e);
  LatticeHull hull = latticeHull(support, limits);
  const auto& pts = hull.latticePoints;

  for (std::size_t i = 0; i < pts.size() && verdict.holds; ++i) {
    const Rational gu = f.coefficient(pts[i]);
    for (std::size_t j = i + 1; j < pts.size() && verdict.holds; ++j) {
      const Rational gv = f.coefficient(pts[j]);
      const Rational lower = std::min(gu, gv);
      forEachInterior(pts[i], pts[j], [&](const Exponent& w, long q, long a) {
        Rational gw = f.coefficient(w);
        if (gw < lower) {
          verdict = {false, ConcavityWitness{"segment", pts[i], w, pts[j], q, a, gu, gw, gv, 0, 0, {}}};
          return false;
        }
        return true;
      });
    }
  }
  if (!verdict.holds) return verdict;

  for (const auto& w : pts) {
    const Rational gw = f.coefficient(w);
    std::vector<Exponent> above;
    std::vector<RatVector> rat;
    for (const auto& u : pts) {
      if (f.coefficient(u) > gw) {
        above.push_back(u);
        rat.push_back(toRational(u));
      }
    }
    if (above.empty()) continue;
    RatMatrix m(w.size() + 1, above.size());
    RatVector b(w.size() + 1);
    for (std::size_t j = 0; j < above.size(); ++j) {
      for (std::size_t i = 0; i < w.size(); ++i) m(i, j) = rat[j][i];
      m(w.size(), j) = 1;
    }
    for (std::size_t i = 0; i < w.size(); ++i) b[i] = Rational(static_cast<long>(w[i]));
    b[w.size()] = 1;
    if (auto lambda = findNonnegativeSolution(m, b)) {
      ConcavityWitness c;
      c.kind = "superlevel";
      c.w = w;
      c.gw = gw;
      for (std::size_t j = 0; j < above.size(); ++j) {
        if ((*lambda)[j] > 0) c.support.push_back(above[j]);
      }
      c.u = c.support.front();
      c.v = c.support.back();
      c.gu = f.coefficient(c.u);
      c.gv = f.coefficient(c.v);
      return {false, c};
    }
  }
  return verdict;
}

}  // namespace asymk
