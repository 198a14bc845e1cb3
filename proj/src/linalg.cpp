#include "hilbcup/linalg.hpp"

#include <algorithm>
#include <utility>

#include "hilbcup/error.hpp"

namespace hilbcup {

namespace {

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

template <class T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Bareiss elimination over the first `pivot_cols` columns. Returns the
// number of pivots found; `sign` tracks row swaps. After the call the leading
// pivot block is upper triangular and m(k, k) holds the k-th leading minor.
std::size_t bareiss(IntegerMatrix& m, std::size_t pivot_cols, int& sign) {
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      swap_rows(m, p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        mpz_class v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

IntegerMatrix clear_row_denominators(const RationalMatrix& m, std::vector<mpz_class>* scales) {
  IntegerMatrix out(m.rows(), m.cols());
  if (scales) scales->assign(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class scaled = m(r, c) * l;
      out(r, c) = scaled.get_num();
    }
    if (scales) (*scales)[r] = l;
  }
  return out;
}

std::size_t rank(const IntegerMatrix& m) {
  IntegerMatrix work = m;
  int sign = 1;
  return bareiss(work, work.cols(), sign);
}

std::size_t rank(const RationalMatrix& m) { return rank(clear_row_denominators(m)); }

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::OutOfRange, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerMatrix work = m;
  int sign = 1;
  if (bareiss(work, work.cols(), sign) < work.rows()) return 0;
  return sign * work(work.rows() - 1, work.cols() - 1);
}

mpq_class determinant(const RationalMatrix& m) {
  std::vector<mpz_class> scales;
  const IntegerMatrix scaled = clear_row_denominators(m, &scales);
  mpz_class denom = 1;
  for (const auto& s : scales) denom *= s;
  mpq_class det(determinant(scaled), denom);
  det.canonicalize();
  return det;
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw Error(ErrorCode::OutOfRange, "solve: shape mismatch");
  RationalMatrix aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  IntegerMatrix work = clear_row_denominators(aug);
  int sign = 1;
  if (bareiss(work, n, sign) < n) throw Error(ErrorCode::SingularBasis, "solve: singular system");

  RationalMatrix x(n, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t i = n; i-- > 0;) {
      mpq_class acc = mpq_class(work(i, n + col));
      for (std::size_t j = i + 1; j < n; ++j) acc -= mpq_class(work(i, j)) * x(j, col);
      acc /= mpq_class(work(i, i));
      x(i, col) = acc;
    }
  }
  return x;
}

std::vector<mpz_class> elementary_divisors(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest non-zero absolute value in the trailing block.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m(r, c) == 0) continue;
          if (pr == rows || abs(m(r, c)) < abs(m(pr, pc))) pr = r, pc = c;
        }
      }
      if (pr == rows) {
        std::sort(out.begin(), out.end());
        return out;
      }
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(bad_row, c);
    }
    out.push_back(abs(m(t, t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hilbcup
