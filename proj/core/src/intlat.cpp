#include "asymk/intlat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace asymk {

namespace {

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void addRowMultiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += k * m(source, j);
}

void addColMultiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += k * m(i, source);
}

void negateRow(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

std::vector<std::int64_t> toInt64(const IntVector& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = asymk::toInt64(v[i]);
  return out;
}

}  // namespace

HermiteForm rowHermite(const IntMatrix& m) {
  HermiteForm hf{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& H = hf.H;
  IntMatrix& U = hf.U;
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < H.rows(); ++col) {
    while (true) {
      std::size_t best = H.rows();
      for (std::size_t i = row; i < H.rows(); ++i) {
        if (H(i, col) != 0 && (best == H.rows() || abs(H(i, col)) < abs(H(best, col)))) best = i;
      }
      if (best == H.rows()) break;
      H.swapRows(row, best);
      U.swapRows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < H.rows(); ++i) {
        if (H(i, col) == 0) continue;
        Integer q = floorDiv(H(i, col), H(row, col));
        addRowMultiple(H, i, row, -q);
        addRowMultiple(U, i, row, -q);
        if (H(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      negateRow(H, row);
      negateRow(U, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floorDiv(H(i, col), H(row, col));
      addRowMultiple(H, i, row, -q);
      addRowMultiple(U, i, row, -q);
    }
    hf.pivotColumns.push_back(col);
    ++row;
  }
  return hf;
}

SmithForm smithForm(const IntMatrix& m) {
  SmithForm sf{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), {}};
  IntMatrix& S = sf.S;
  const std::size_t rows = S.rows();
  const std::size_t cols = S.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (S(i, j) != 0 && (bi == rows || abs(S(i, j)) < abs(S(bi, bj)))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return sf;
      S.swapRows(t, bi);
      sf.U.swapRows(t, bi);
      S.swapCols(t, bj);
      sf.W.swapCols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = floorDiv(S(i, t), S(t, t));
        addRowMultiple(S, i, t, -q);
        addRowMultiple(sf.U, i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = floorDiv(S(t, j), S(t, t));
        addColMultiple(S, j, t, -q);
        addColMultiple(sf.W, j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          Integer r;
          mpz_tdiv_r(r.get_mpz_t(), S(i, j).get_mpz_t(), S(t, t).get_mpz_t());
          if (r != 0) {
            addRowMultiple(S, t, i, 1);
            addRowMultiple(sf.U, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (S(t, t) < 0) {
      negateRow(S, t);
      negateRow(sf.U, t);
    }
    sf.invariants.push_back(S(t, t));
  }
  return sf;
}

Integer maximalMinorGcd(const IntMatrix& m) {
  Integer g = 0;
  forEachSubset(m.cols(), m.rows(), [&](const std::vector<std::size_t>& cols) {
    Integer det = determinant(selectColumns(m, cols));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    return true;
  });
  return g;
}

AcyclicityResult testAcyclic(const IntMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();

  // c.y >= b, derived as the nonnegative combination lambda of the originals.
  struct Constraint {
    RatVector c;
    Rational b;
    RatVector lambda;
  };

  auto normalize = [](Constraint& k) {
    Rational s = 0;
    for (const auto& x : k.c) {
      if (x != 0) {
        s = abs(x);
        break;
      }
    }
    if (s == 0) s = abs(k.b);
    if (s == 0) return;
    for (auto& x : k.c) x /= s;
    k.b /= s;
    for (auto& x : k.lambda) x /= s;
  };

  std::vector<Constraint> current;
  for (std::size_t j = 0; j < n; ++j) {
    Constraint k{RatVector(d), Rational(1), RatVector(n, Rational(0))};
    for (std::size_t i = 0; i < d; ++i) k.c[i] = Rational(a(i, j));
    k.lambda[j] = 1;
    normalize(k);
    current.push_back(std::move(k));
  }

  // stages[k] holds the system in y_0..y_k before y_k is eliminated.
  std::vector<std::vector<Constraint>> stages(d);
  for (std::size_t step = 0; step < d; ++step) {
    const std::size_t var = d - 1 - step;
    stages[var] = current;
    std::vector<Constraint> pos, neg, next;
    for (auto& k : current) {
      if (k.c[var] > 0) pos.push_back(k);
      else if (k.c[var] < 0) neg.push_back(k);
      else next.push_back(k);
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Rational wp = -q.c[var];
        Rational wq = p.c[var];
        Constraint k{RatVector(d), wp * p.b + wq * q.b, RatVector(n)};
        for (std::size_t i = 0; i < d; ++i) k.c[i] = wp * p.c[i] + wq * q.c[i];
        for (std::size_t j = 0; j < n; ++j) k.lambda[j] = wp * p.lambda[j] + wq * q.lambda[j];
        k.c[var] = 0;
        normalize(k);
        next.push_back(std::move(k));
      }
    }
    // Drop duplicates and trivially satisfied rows; keep the first derivation.
    std::map<std::pair<std::vector<std::string>, std::string>, bool> seen;
    current.clear();
    for (auto& k : next) {
      bool allZero = std::all_of(k.c.begin(), k.c.end(), [](const Rational& x) { return x == 0; });
      if (allZero && k.b <= 0) continue;
      std::vector<std::string> key;
      for (const auto& x : k.c) key.push_back(x.get_str());
      if (!seen.emplace(std::make_pair(key, k.b.get_str()), true).second) continue;
      current.push_back(std::move(k));
    }
  }

  AcyclicityResult result;
  for (const auto& k : current) {
    // Every coefficient is zero here; b > 0 means 0 >= b > 0 was derived.
    if (k.b > 0) {
      result.acyclic = false;
      result.kernelWitness = primitive(k.lambda);
      return result;
    }
  }

  RatVector y(d, Rational(0));
  for (std::size_t var = 0; var < d; ++var) {
    std::optional<Rational> lo, hi;
    for (const auto& k : stages[var]) {
      if (k.c[var] == 0) continue;
      Rational rest = k.b;
      for (std::size_t i = 0; i < var; ++i) rest -= k.c[i] * y[i];
      Rational bound = rest / k.c[var];
      if (k.c[var] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo) {
      Integer up;
      mpz_cdiv_q(up.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      y[var] = (!hi || Rational(up) <= *hi) ? Rational(up) : *lo;
    } else if (hi) {
      Integer down;
      mpz_fdiv_q(down.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      y[var] = Rational(down);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i) s += y[i] * a(i, j);
    if (s < 1) throw std::logic_error("Fourier-Motzkin back substitution produced an invalid functional");
  }
  result.acyclic = true;
  result.functional = std::move(y);
  return result;
}

MatrixConfig buildConfig(const std::vector<Exponent>& rows) { return buildConfig(fromInt64Rows(rows)); }

MatrixConfig buildConfig(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw Error(ErrorKind::InvalidInput, "matrix must have at least one row and one column");
  if (a.cols() < a.rows()) throw Error(ErrorKind::RankDeficient, "matrix has fewer columns than rows");

  MatrixConfig cfg;
  cfg.entries = a;
  cfg.d = a.rows();
  cfg.n = a.cols();
  cfg.rank = rank(a);
  if (cfg.rank < cfg.d) {
    throw Error(ErrorKind::RankDeficient,
                "matrix rank " + std::to_string(cfg.rank) + " is less than the row count " + std::to_string(cfg.d));
  }

  for (std::size_t j = 0; j < cfg.n; ++j) cfg.columns.push_back(toInt64(a.col(j)));

  AcyclicityResult acyc = testAcyclic(a);
  if (!acyc.acyclic) {
    throw Error(ErrorKind::NotAcyclic, "a nonzero nonnegative integer vector lies in the kernel",
                toInt64(acyc.kernelWitness));
  }
  cfg.positiveFunctional = acyc.functional;
  {
    Integer l = 1;
    for (const auto& x : acyc.functional) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector scaled(cfg.d);
    for (std::size_t i = 0; i < cfg.d; ++i) scaled[i] = Rational(acyc.functional[i] * l).get_num();
    cfg.integerFunctional = toInt64(scaled);
    for (const auto& col : cfg.columns) cfg.weights.push_back(dot(cfg.integerFunctional, col));
  }

  Integer minorGcd = maximalMinorGcd(a);
  SmithForm sf = smithForm(a);
  Integer product = 1;
  for (const auto& s : sf.invariants) product *= s;
  if (product != minorGcd) throw std::logic_error("lattice index mismatch between minors and Smith form");
  cfg.latticeIndex = minorGcd;

  // Rows of U with zero image under A^T span ker(A) over Z.
  HermiteForm hf = rowHermite(a.transpose());
  const std::size_t k = cfg.n - cfg.d;
  IntMatrix basis(k, cfg.n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < cfg.n; ++j) basis(i, j) = hf.U(cfg.d + i, j);
  }
  if (k > 0) {
    basis = rowHermite(basis).H;
    IntMatrix image = a * basis.transpose();
    for (std::size_t i = 0; i < image.rows(); ++i) {
      for (std::size_t j = 0; j < image.cols(); ++j) {
        if (image(i, j) != 0) throw std::logic_error("kernel basis vector not in the kernel");
      }
    }
    SmithForm ks = smithForm(basis);
    Integer index = 1;
    for (const auto& s : ks.invariants) index *= s;
    if (ks.invariants.size() != k || index != 1) throw std::logic_error("kernel basis does not span the kernel lattice");
  }
  for (std::size_t i = 0; i < k; ++i) cfg.kernelBasis.push_back(toInt64(basis.row(i)));
  return cfg;
}

bool isTotallyUnimodular(const IntMatrix& a, const Limits& limits) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  Integer total = 0;
  for (std::size_t k = 1; k <= std::min(d, n); ++k) {
    Integer cd, cn;
    mpz_bin_uiui(cd.get_mpz_t(), d, k);
    mpz_bin_uiui(cn.get_mpz_t(), n, k);
    total += cd * cn;
  }
  if (total > Integer(static_cast<unsigned long>(limits.minorCap))) {
    throw Error(ErrorKind::SizeLimit, "square minor count " + total.get_str() + " exceeds the cap");
  }
  bool ok = true;
  for (std::size_t k = 1; k <= std::min(d, n) && ok; ++k) {
    forEachSubset(d, k, [&](const std::vector<std::size_t>& rows) {
      forEachSubset(n, k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
        }
        Integer det = determinant(sub);
        if (det > 1 || det < -1) ok = false;
        return ok;
      });
      return ok;
    });
  }
  return ok;
}

GaleBlocks galeBlocks(const MatrixConfig& config) {
  const IntMatrix& a = config.entries;
  const std::size_t d = config.d;
  const std::size_t n = config.n;
  const std::size_t k = n - d;

  std::vector<std::size_t> chosen, fallback;
  forEachSubset(n, d, [&](const std::vector<std::size_t>& cols) {
    Integer det = abs(determinant(selectColumns(a, cols)));
    if (det == 0) return true;
    if (fallback.empty()) fallback = cols;
    if (det == config.latticeIndex) {
      chosen = cols;
      return false;
    }
    return true;
  });
  if (chosen.empty()) chosen = fallback;

  GaleBlocks gb;
  gb.columnPermutation = chosen;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) gb.columnPermutation.push_back(j);
  }
  IntMatrix ap = selectColumns(a, gb.columnPermutation);

  // Lower-triangular form of the leading block: reverse rows and columns,
  // take the upper row HNF, reverse back.
  IntMatrix lead(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) lead(i, j) = ap(d - 1 - i, d - 1 - j);
  }
  HermiteForm hf = rowHermite(lead);
  gb.rowChange = IntMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gb.rowChange(i, j) = hf.U(d - 1 - i, d - 1 - j);
  }
  gb.permuted = gb.rowChange * ap;
  gb.H = IntMatrix(d, d);
  gb.Bprime = IntMatrix(d, k);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gb.H(i, j) = gb.permuted(i, j);
    for (std::size_t j = 0; j < k; ++j) gb.Bprime(i, j) = gb.permuted(i, d + j);
  }
  gb.scale = abs(determinant(gb.H));

  // scale * H^{-1} is the adjugate up to sign, hence integral.
  RatMatrix hinv(d, d);
  RatMatrix hr = toRational(gb.H);
  for (std::size_t j = 0; j < d; ++j) {
    RatVector e(d, Rational(0));
    e[j] = 1;
    auto x = solve(hr, e);
    for (std::size_t i = 0; i < d; ++i) hinv(i, j) = (*x)[i];
  }
  auto integral = [](const Rational& q) {
    if (q.get_den() != 1) throw std::logic_error("Gale block is not integral");
    return Integer(q.get_num());
  };
  gb.J = IntMatrix(n, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gb.J(i, j) = integral(hinv(i, j) * gb.scale);
  }
  gb.B = IntMatrix(n, k);
  IntMatrix top = IntMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) top(i, j) = gb.J(i, j);
  }
  IntMatrix topB = top * gb.Bprime;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) gb.B(i, j) = topB(i, j);
  }
  for (std::size_t j = 0; j < k; ++j) gb.B(d + j, j) = -gb.scale;
  gb.L = IntMatrix(k, n);
  for (std::size_t j = 0; j < k; ++j) gb.L(j, d + j) = 1;
  return gb;
}

std::vector<std::string> checkGaleIdentities(const GaleBlocks& gb) {
  std::vector<std::string> failed;
  const std::size_t d = gb.H.rows();
  const std::size_t k = gb.Bprime.cols();
  auto isScaledIdentity = [&](const IntMatrix& m, const Integer& s) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != (i == j ? s : Integer(0))) return false;
      }
    }
    return true;
  };
  IntMatrix hb(d, d + k);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) hb(i, j) = gb.H(i, j);
    for (std::size_t j = 0; j < k; ++j) hb(i, d + j) = gb.Bprime(i, j);
  }
  if (!(hb == gb.permuted)) failed.push_back("VAP = [H|B']");
  if (!isScaledIdentity(gb.permuted * gb.B, Integer(0))) failed.push_back("VAP B = 0");
  if (!isScaledIdentity(gb.permuted * gb.J, gb.scale)) failed.push_back("VAP J = mI");
  if (!isScaledIdentity(gb.L * gb.J, Integer(0))) failed.push_back("L J = 0");
  if (!isScaledIdentity(gb.L * gb.B, Integer(-gb.scale))) failed.push_back("L B = -mI");
  if (abs(determinant(gb.rowChange)) != 1) failed.push_back("V unimodular");
  return failed;
}

}  // namespace asymk
