#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace asymk {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vectors, lattice points and matrix columns at desk scale.
using Exponent = std::vector<std::int64_t>;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : e) {
      h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Exponent add(const Exponent& a, const Exponent& b);
Exponent sub(const Exponent& a, const Exponent& b);
Exponent scale(const Exponent& a, std::int64_t k);
std::int64_t dot(const Exponent& a, const Exponent& b);
bool isZero(const Exponent& a);
std::string toString(const Exponent& e);

Rational dot(const RatVector& a, const RatVector& b);
RatVector toRational(const Exponent& e);
std::string toString(const Rational& q);

// Integer -> int64 with a range check; throws SizeLimit when it does not fit.
std::int64_t toInt64(const Integer& z);

Integer factorial(unsigned k);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix fromRows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i].at(j);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swapCols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  }
  return y;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix toRational(const IntMatrix& m);
IntMatrix fromInt64Rows(const std::vector<Exponent>& rows);

// Submatrix on the given column indices, all rows kept.
template <typename T>
Matrix<T> selectColumns(const Matrix<T>& m, const std::vector<std::size_t>& cols) {
  Matrix<T> s(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(i, cols[j]);
  }
  return s;
}

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Solves a square nonsingular system; nullopt when singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

// Basis of the right nullspace, from the reduced row echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

// Scales a rational vector to a primitive integer vector with the same direction.
IntVector primitive(const RatVector& v);

Integer gcd(const IntVector& v);

// Enumerates k-subsets of {0..n-1} in lexicographic order.
void forEachSubset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit);

std::ostream& operator<<(std::ostream& os, const Exponent& e);

}  // namespace asymk
