#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace hilbcup {

// Dense row-major matrix over an exact ring (mpz_class or mpq_class).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<mpz_class>;
using RationalMatrix = Matrix<mpq_class>;

// Each row scaled by the lcm of its denominators.
IntegerMatrix clear_row_denominators(const RationalMatrix& m, std::vector<mpz_class>* scales = nullptr);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);

// Bareiss fraction-free elimination.
mpz_class determinant(const IntegerMatrix& m);
mpq_class determinant(const RationalMatrix& m);

// Solves a * x = b for square non-singular a. Fraction-free elimination on
// [a | b] scaled to integers, followed by exact back substitution. Throws
// Error(SingularBasis) when a is singular.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

// Non-zero invariant factors d_1 | d_2 | ... of the Smith normal form, all
// positive.
std::vector<mpz_class> elementary_divisors(const IntegerMatrix& m);

}  // namespace hilbcup
