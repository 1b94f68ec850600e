#include "asymk/veronese.hpp"

#include <algorithm>

#include "asymk/concavity.hpp"
#include "asymk/polytope.hpp"

namespace asymk {

LaurentPoly phi(const LaurentPoly& f, const CountTable& table) {
  const std::int64_t r = table.r();
  LaurentPoly out(f.dim());
  for (const auto& [v, fv] : f.terms()) {
    table.forEachNonzero([&](const Exponent& w, const Integer& count) {
      Exponent u(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        const std::int64_t x = w[i] + v[i];
        if (x % r != 0) return;
        u[i] = x / r;
      }
      out.addTerm(u, fv * Rational(count));
    });
  }
  return out;
}

LaurentPoly phi(const LaurentPoly& f, const MatrixConfig& config, std::int64_t r, PhiMethod method,
                const Limits& limits) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive");
  if (f.dim() != config.d) throw Error(ErrorKind::InvalidInput, "polynomial dimension does not match the matrix row count");
  if (method == PhiMethod::Geometric) return sieve(multiply(f, geometricFactor(config, r, limits), limits), r);
  return phi(f, CountTable(config, r, limits));
}

AsymptoticResult kPolynomial(const MatrixConfig& config, const Limits& limits) {
  Zonotope z = zonotopeBuild(config, limits);
  DegeneracyResult deg = isDegenerate(config, z);
  if (deg.degenerate) {
    throw Error(ErrorKind::DegenerateMap,
                "boundary lattice point " + toString(deg.witness) + " has a fiber of full dimension", deg.witness);
  }
  AsymptoticResult res;
  res.kPoly = LaurentPoly(config.d);
  res.m = config.latticeIndex;
  res.nMinusD = config.n - config.d;
  FiberEnumerator fibers(config);
  for (const auto& u : z.interiorLatticePoints) {
    Rational vol = fibers(u).normalizedVolume;
    res.perPoint.emplace(u, vol);
    res.kPoly.addTerm(u, vol);
  }
  res.coefficientSum = res.kPoly.evalAtOne();
  const Integer fact = factorial(static_cast<unsigned>(res.nMinusD));
  res.latticeSum = Rational(res.m * fact);
  res.statedSum = Rational(pow(res.m, res.nMinusD) * fact);
  if (res.coefficientSum != res.latticeSum) {
    throw std::logic_error("K-polynomial coefficient sum " + res.coefficientSum.get_str() + " differs from m(n-d)! = " +
                           res.latticeSum.get_str());
  }
  return res;
}

namespace {

std::string describeTerm(std::size_t index, const ExpansionTerm& term) {
  std::string s = "expansion term " + std::to_string(index + 1) + " (s = {";
  for (std::size_t i = 0; i < term.s.size(); ++i) s += (i ? "," : "") + std::to_string(term.s[i]);
  return s + "})";
}

LaurentPoly parallelepipedPoints(const MatrixConfig& sub) {
  const std::size_t d = sub.d;
  RatMatrix a = toRational(sub.entries);
  Exponent lo(d, 0), hi(d, 0);
  for (const auto& col : sub.columns) {
    for (std::size_t i = 0; i < d; ++i) (col[i] > 0 ? hi[i] : lo[i]) += col[i];
  }
  LaurentPoly out(d);
  Exponent u = lo;
  while (true) {
    auto x = solve(a, toRational(u));
    bool inside = true;
    for (const auto& xi : *x) {
      if (xi < 0 || xi >= 1) inside = false;
    }
    if (inside) out.addTerm(u, 1);
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (u[i] < hi[i]) {
        ++u[i];
        done = false;
        break;
      }
      u[i] = lo[i];
    }
    if (done) break;
  }
  return out;
}

}  // namespace

CodimResult codimAsymptotic(const MatrixConfig& config, const AsymptoticExpansion& expansion, const Limits& limits) {
  const std::size_t n = config.n;
  const std::size_t d = config.d;
  const std::size_t ell = expansion.codim;
  if (ell < 1 || ell > n - d) {
    throw Error(ErrorKind::InvalidInput, "codimension must lie in [1, n-d]");
  }
  if (expansion.terms.empty()) throw Error(ErrorKind::InvalidInput, "expansion has no terms");
  CodimResult res;
  res.order = n - ell - d;
  res.stride = config.latticeIndex;
  res.G = LaurentPoly(d);
  for (std::size_t t = 0; t < expansion.terms.size(); ++t) {
    const ExpansionTerm& term = expansion.terms[t];
    const std::string where = describeTerm(t, term);
    if (term.s.size() != ell) throw Error(ErrorKind::InvalidInput, where + " does not have size " + std::to_string(ell));
    if (term.mu < 1) throw Error(ErrorKind::InvalidInput, where + " has a nonpositive multiplicity");
    std::vector<std::size_t> removed;
    for (auto idx : term.s) {
      if (idx < 1 || idx > n) throw Error(ErrorKind::InvalidInput, where + " has an index outside 1.." + std::to_string(n));
      removed.push_back(idx - 1);
    }
    std::sort(removed.begin(), removed.end());
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
      throw Error(ErrorKind::InvalidInput, where + " repeats an index");
    }
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::binary_search(removed.begin(), removed.end(), j)) kept.push_back(j);
    }

    MatrixConfig sub;
    LaurentPoly k;
    try {
      sub = buildConfig(selectColumns(config.entries, kept));
      k = res.order == 0 ? parallelepipedPoints(sub) : kPolynomial(sub, limits).kPoly;
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.what(), e.witness());
    }
    mpz_lcm(res.stride.get_mpz_t(), res.stride.get_mpz_t(), sub.latticeIndex.get_mpz_t());
    res.termIndices.push_back(sub.latticeIndex);
    Rational coef = Rational(term.mu) / Rational(pow(sub.latticeIndex, res.order));
    res.G += multiply(k, denominatorFactor(config, removed), limits) * coef;
  }
  res.limit = res.G * Rational(1, factorial(static_cast<unsigned>(res.order)));
  return res;
}

std::optional<LaurentPoly> extrapolate(const std::vector<LaurentPoly>& samples, std::int64_t step, std::size_t order) {
  if (samples.size() < order + 1 || samples.empty()) return std::nullopt;
  const std::size_t base = samples.size() - order - 1;
  LaurentPoly diff(samples.front().dim());
  for (std::size_t i = 0; i <= order; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), order, i);
    Rational c((order - i) % 2 ? -binom : binom);
    diff += samples[base + i] * c;
  }
  Integer denom = pow(Integer(static_cast<long>(step)), order) * factorial(static_cast<unsigned>(order));
  return diff * Rational(1, denom);
}

namespace {

Rational maxNorm(const LaurentPoly& p) {
  Rational best = 0;
  for (const auto& [e, c] : p.terms()) best = std::max(best, Rational(abs(c)));
  return best;
}

// Extrapolates along a subsequence with spacing k * step, taking the first
// spacing whose last two windows agree.
std::pair<std::optional<LaurentPoly>, std::int64_t> stableLimit(const std::vector<LaurentPoly>& seq, std::int64_t step,
                                                                std::size_t order, bool& stable) {
  stable = false;
  std::optional<LaurentPoly> fallback;
  std::int64_t fallbackStep = step;
  for (std::size_t k = 1; !seq.empty(); ++k) {
    // Subsequence ending at the last sample with spacing k.
    std::vector<LaurentPoly> sub;
    for (std::size_t i = (seq.size() - 1) % k; i < seq.size(); i += k) sub.push_back(seq[i]);
    if (sub.size() < order + 2) break;
    auto last = extrapolate(sub, step * static_cast<std::int64_t>(k), order);
    std::vector<LaurentPoly> prev(sub.begin(), sub.end() - 1);
    auto before = extrapolate(prev, step * static_cast<std::int64_t>(k), order);
    if (!fallback) {
      fallback = last;
      fallbackStep = step * static_cast<std::int64_t>(k);
    }
    if (last && before && *last == *before) {
      stable = true;
      return {last, step * static_cast<std::int64_t>(k)};
    }
  }
  if (!fallback && !seq.empty()) {
    fallback = extrapolate(seq, step, order);
  }
  return {fallback, fallbackStep};
}

}  // namespace

ConvergenceReport convergenceReport(const LaurentPoly& f, const MatrixConfig& config, std::int64_t rMax,
                                    const ConvergenceOptions& options, const Limits& limits) {
  ConvergenceReport rep;
  rep.stride = options.stride ? *options.stride : toInt64(config.latticeIndex);
  rep.order = options.order ? *options.order : config.n - config.d;
  rep.rMax = rMax;
  if (rep.stride < 1) throw Error(ErrorKind::InvalidInput, "stride must be positive");
  if (rMax < rep.stride) throw Error(ErrorKind::InvalidInput, "rMax must be at least the stride");
  if (options.target) {
    rep.target = options.target;
  } else if (!options.order || *options.order == config.n - config.d) {
    try {
      AsymptoticResult k = kPolynomial(config, limits);
      rep.target = k.kPoly * (f.evalAtOne() / Rational(factorial(static_cast<unsigned>(rep.order))));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateMap) throw;
    }
  }
  const Integer orderFact = factorial(static_cast<unsigned>(rep.order));

  auto normalized = [&](const LaurentPoly& p, std::int64_t r) {
    return p * Rational(1, pow(Integer(static_cast<long>(r)), rep.order));
  };

  std::vector<LaurentPoly> mainSeq;
  for (std::int64_t r = rep.stride; r <= rMax; r += rep.stride) {
    ConvergenceSample s;
    s.r = r;
    s.phi = phi(f, config, r, PhiMethod::Count, limits);
    if (rep.target) {
      s.difference = normalized(s.phi, r) - *rep.target;
      s.maxNorm = maxNorm(s.difference);
      s.residual = s.phi * Rational(orderFact) -
                   *rep.target * Rational(pow(Integer(static_cast<long>(r)), rep.order) * orderFact);
    }
    s.nonnegative = std::all_of(s.phi.terms().begin(), s.phi.terms().end(), [](const auto& t) { return t.second >= 0; });
    if (options.checkConcavity) {
      s.logConcave = isLogConcave(s.phi, limits).holds;
      s.quasiConcave = isQuasiConcave(s.phi, limits).holds;
    }
    mainSeq.push_back(s.phi);
    rep.samples.push_back(std::move(s));
  }

  bool stable = false;
  auto [lim, step] = stableLimit(mainSeq, rep.stride, rep.order, stable);
  rep.limit = lim;
  rep.limitStep = step;
  rep.limitStable = stable;
  if (rep.limit && rep.target) rep.limitMatchesTarget = *rep.limit == *rep.target;

  if (options.checkConcavity) {
    std::optional<std::size_t> first;
    for (std::size_t i = rep.samples.size(); i-- > 0;) {
      const auto& s = rep.samples[i];
      if (!(s.nonnegative && s.logConcave && s.quasiConcave)) break;
      first = i;
    }
    if (first) rep.empiricalR0 = rep.samples[*first].r;
  }
  rep.caveat = "empirical r0 is observed on sampled r <= " + std::to_string(rMax) + " only; unverified beyond rMax";

  const std::optional<LaurentPoly> reference = rep.target ? rep.target : rep.limit;
  const std::int64_t residueMax = options.residueRMax ? std::min(*options.residueRMax, rMax) : rMax;
  for (std::int64_t c = 1; c < rep.stride; ++c) {
    ResidueDiagnostic diag;
    diag.residue = c;
    std::vector<LaurentPoly> seq;
    for (std::int64_t r = c; r <= residueMax; r += rep.stride) {
      LaurentPoly p = phi(f, config, r, PhiMethod::Count, limits);
      diag.rs.push_back(r);
      if (reference) diag.maxNorms.push_back(maxNorm(normalized(p, r) - *reference));
      seq.push_back(std::move(p));
    }
    bool classStable = false;
    diag.classLimit = stableLimit(seq, rep.stride, rep.order, classStable).first;
    diag.agreesWithTarget = diag.classLimit && reference && *diag.classLimit == *reference;
    if (diag.classLimit && reference && !diag.agreesWithTarget) rep.oscillates = true;
    rep.residues.push_back(std::move(diag));
  }
  return rep;
}

}  // namespace asymk
