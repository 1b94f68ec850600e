#include "asymk/laurent.hpp"

#include <sstream>

namespace asymk {

LaurentPoly LaurentPoly::constant(std::size_t dim, const Rational& c) {
  LaurentPoly p(dim);
  p.addTerm(Exponent(dim, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
  LaurentPoly p(e.size());
  p.addTerm(e, c);
  return p;
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::addTerm(const Exponent& e, const Rational& c) {
  if (e.size() != dim_) throw Error(ErrorKind::InvalidInput, "exponent length does not match polynomial dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational LaurentPoly::evalAtOne() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shift(const Exponent& w) const {
  LaurentPoly out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(add(e, w), c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) addTerm(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) addTerm(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b, const Limits& limits) {
  LaurentPoly out(a.dim());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out.addTerm(add(ea, eb), ca * cb);
    if (out.size() > limits.termCap) {
      throw Error(ErrorKind::SizeLimit, "polynomial product exceeds the term cap of " + std::to_string(limits.termCap));
    }
  }
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b, Limits{}); }

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    std::vector<std::string> factors;
    if (mag != 1 || asymk::isZero(e)) factors.push_back(mag.get_str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = "t" + std::to_string(i + 1);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

LaurentPoly sieve(const LaurentPoly& f, std::int64_t r) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "sieve stride must be positive");
  LaurentPoly out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    bool divisible = true;
    for (auto x : e) {
      if (x % r != 0) {
        divisible = false;
        break;
      }
    }
    if (!divisible) continue;
    Exponent q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) q[i] = e[i] / r;
    out.addTerm(q, c);
  }
  return out;
}

LaurentPoly geometricFactor(const MatrixConfig& config, std::int64_t r, const Limits& limits) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive");
  LaurentPoly prod = LaurentPoly::constant(config.d, 1);
  for (const auto& a : config.columns) {
    LaurentPoly factor(config.d);
    for (std::int64_t k = 0; k < r; ++k) factor.addTerm(scale(a, k), 1);
    prod = multiply(prod, factor, limits);
  }
  return prod;
}

Rational SeriesBox::coefficient(const Exponent& w) const {
  auto it = coefficients.find(w);
  return it == coefficients.end() ? Rational(0) : it->second;
}

SeriesBox seriesExpand(const LaurentPoly& f, const MatrixConfig& config, const Rational& bound, const Limits& limits) {
  SeriesBox box;
  box.bound = bound;
  // y = integerFunctional / scale for the scale fixed when the config was built.
  Rational ratio = 0;
  for (std::size_t i = 0; i < config.d; ++i) {
    if (config.positiveFunctional[i] != 0) {
      ratio = Rational(static_cast<long>(config.integerFunctional[i])) / config.positiveFunctional[i];
      break;
    }
  }
  Rational cut = bound * ratio;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), cut.get_num_mpz_t(), cut.get_den_mpz_t());
  box.weightCut = toInt64(fl);

  std::map<Exponent, Rational> current;
  for (const auto& [e, c] : f.terms()) {
    if (config.weight(e) <= box.weightCut) current.emplace(e, c);
  }
  for (std::size_t j = 0; j < config.n; ++j) {
    const Exponent& a = config.columns[j];
    std::map<Exponent, Rational> next;
    for (const auto& [e, c] : current) {
      Exponent w = e;
      while (config.weight(w) <= box.weightCut) {
        auto [it, inserted] = next.emplace(w, c);
        if (!inserted) it->second += c;
        w = add(w, a);
      }
      if (next.size() > limits.termCap) {
        throw Error(ErrorKind::SizeLimit, "series box exceeds the term cap of " + std::to_string(limits.termCap));
      }
    }
    current.clear();
    for (auto& [e, c] : next) {
      if (c != 0) current.emplace(e, std::move(c));
    }
  }
  box.coefficients = std::move(current);
  return box;
}

LaurentPoly monomialQuotientKPoly(const MatrixConfig& config, const std::vector<Exponent>& generators) {
  const std::size_t g = generators.size();
  if (g > 24) throw Error(ErrorKind::SizeLimit, "too many generators for inclusion-exclusion");
  for (const auto& gen : generators) {
    if (gen.size() != config.n) throw Error(ErrorKind::InvalidInput, "generator length must equal the column count");
    for (auto x : gen) {
      if (x < 0) throw Error(ErrorKind::InvalidInput, "generators must be nonnegative");
    }
  }
  LaurentPoly out(config.d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    Exponent lcm(config.n, 0);
    int sign = 1;
    for (std::size_t i = 0; i < g; ++i) {
      if (!(mask >> i & 1U)) continue;
      sign = -sign;
      for (std::size_t j = 0; j < config.n; ++j) lcm[j] = std::max(lcm[j], generators[i][j]);
    }
    Exponent deg(config.d, 0);
    for (std::size_t j = 0; j < config.n; ++j) deg = add(deg, scale(config.columns[j], lcm[j]));
    out.addTerm(deg, sign);
  }
  return out;
}

LaurentPoly denominatorFactor(const MatrixConfig& config, const std::vector<std::size_t>& columns) {
  LaurentPoly out = LaurentPoly::constant(config.d, 1);
  for (auto j : columns) {
    LaurentPoly f = LaurentPoly::constant(config.d, 1);
    f.addTerm(config.columns.at(j), -1);
    out = out * f;
  }
  return out;
}

}  // namespace asymk
