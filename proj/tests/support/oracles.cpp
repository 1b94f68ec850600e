#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

// Calls visit(Ax) for every x in [0,r-1]^n.
template <typename Visit>
void forEachImage(const Rows& a, std::int64_t r, Visit visit) {
  const std::size_t d = a.size();
  const std::size_t n = a.front().size();
  std::vector<std::int64_t> x(n, 0);
  Exponent img(d, 0);
  while (true) {
    visit(img);
    std::size_t j = 0;
    while (j < n && x[j] == r - 1) {
      for (std::size_t i = 0; i < d; ++i) img[i] -= a[i][j] * (r - 1);
      x[j] = 0;
      ++j;
    }
    if (j == n) return;
    ++x[j];
    for (std::size_t i = 0; i < d; ++i) img[i] += a[i][j];
  }
}

std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
  // Bareiss on small int64 matrices.
  const std::size_t k = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t s = p + 1;
      while (s < k && m[s][p] == 0) ++s;
      if (s == k) return 0;
      std::swap(m[p], m[s]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    }
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

}  // namespace

Integer countBox(const Rows& a, std::int64_t r, const Exponent& w) {
  Integer c = 0;
  forEachImage(a, r, [&](const Exponent& img) {
    if (img == w) ++c;
  });
  return c;
}

Poly phi(const Rows& a, const Poly& f, std::int64_t r) {
  Poly out;
  forEachImage(a, r, [&](const Exponent& img) {
    for (const auto& [v, c] : f) {
      Exponent e(img.size());
      bool divisible = true;
      for (std::size_t i = 0; i < img.size() && divisible; ++i) {
        std::int64_t s = img[i] + v[i];
        if (s % r != 0) divisible = false;
        e[i] = s / r;
      }
      if (divisible) out[e] += c;
    }
  });
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<Integer> eulerianRow(int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Integer> row(std::max(k, 1), 0);
  do {
    int asc = 0;
    for (int i = 0; i + 1 < k; ++i) asc += perm[i] < perm[i + 1];
    ++row[asc];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return row;
}

Rational asymptoticCoefficient(const Rows& a, const Exponent& u, std::int64_t step) {
  const std::size_t k = a.front().size() - a.size();
  std::vector<Integer> counts;
  for (std::size_t s = 1; s <= k + 2; ++s) {
    const std::int64_t r = step * static_cast<std::int64_t>(s);
    Exponent w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = r * u[i];
    counts.push_back(countBox(a, r, w));
  }
  auto kthDifference = [&](std::size_t start) {
    std::vector<Integer> v(counts.begin() + start, counts.begin() + start + k + 1);
    for (std::size_t level = 0; level < k; ++level) {
      for (std::size_t i = 0; i + 1 < v.size() - level; ++i) v[i] = v[i + 1] - v[i];
    }
    return v[0];
  };
  const Integer first = kthDifference(0);
  if (first != kthDifference(1)) throw std::logic_error("count is not a polynomial of the expected degree");
  Rational c(first, asymk::pow(Integer(static_cast<long>(step)), k));
  c.canonicalize();
  return c;
}

std::int64_t minorLcm(const Rows& a) {
  const std::size_t d = a.size();
  const std::size_t n = a.front().size();
  std::int64_t l = 1;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
  do {
    std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d));
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!pick[j]) continue;
      for (std::size_t i = 0; i < d; ++i) m[i][c] = a[i][j];
      ++c;
    }
    std::int64_t v = det(m);
    if (v != 0) l = std::lcm(l, v < 0 ? -v : v);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return l;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace oracle
