#include "asymk/lp.hpp"

namespace asymk {

std::optional<RatVector> findNonnegativeSolution(const RatMatrix& m, const RatVector& b) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  const std::size_t width = n + rows + 1;  // originals, artificials, rhs

  // Tableau row i: [M_i | e_i | b_i] with b_i >= 0; objective row is the
  // negated sum of the constraint rows (reduced costs for sum of artificials).
  RatMatrix t(rows + 1, width);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-m(i, j)) : m(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip ? Rational(-b[i]) : b[i];
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(rows, j) -= t(i, j);
    t(rows, width - 1) -= t(i, width - 1);
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    Rational inv = 1 / t(pr, pc);
    for (std::size_t j = 0; j < width; ++j) t(pr, j) *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == pr || t(i, pc) == 0) continue;
      Rational f = t(i, pc);
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(pr, j);
    }
    basis[pr] = pc;
  };

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t(rows, j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, width - 1) / t(i, enter);
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen for phase 1
    pivot(leave, enter);
  }

  if (t(rows, width - 1) != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < n) x[basis[i]] = t(i, width - 1);
  }
  return x;
}

bool inConvexHull(const std::vector<RatVector>& points, const RatVector& w) {
  if (points.empty()) return false;
  const std::size_t dim = w.size();
  RatMatrix m(dim + 1, points.size());
  RatVector b(dim + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = points[j][i];
    m(dim, j) = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) b[i] = w[i];
  b[dim] = 1;
  return findNonnegativeSolution(m, b).has_value();
}

}  // namespace asymk
