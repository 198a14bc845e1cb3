#include <doctest.h>

#include <random>

#include "hilbcup/error.hpp"
#include "hilbcup/linalg.hpp"
#include "oracles.hpp"

using namespace hilbcup;

namespace {

RationalMatrix rational(std::initializer_list<std::initializer_list<mpq_class>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

IntegerMatrix integer(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("determinant against Laplace expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    RationalMatrix m(n, n);
    std::vector<std::vector<mpq_class>> dense(n, std::vector<mpq_class>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        mpq_class v(num(rng), den(rng));
        v.canonicalize();
        if (trial % 5 == 0 && c == 0) v = 0;
        m(r, c) = v;
        dense[r][c] = v;
      }
    }
    CHECK(determinant(m) == oracle::laplace_determinant(dense));
  }
  CHECK(determinant(integer({{2, 1}, {4, 2}})) == 0);
  CHECK(determinant(integer({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("rank") {
  CHECK(rank(integer({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
  CHECK(rank(rational({{mpq_class(1, 2), 1}, {1, 2}})) == 1);
  CHECK(rank(IntegerMatrix(3, 2)) == 0);
  CHECK(rank(integer({{0, 1, 0}, {0, 0, 1}})) == 2);
}

TEST_CASE("solve") {
  const auto a = rational({{2, 1}, {1, 3}});
  const auto b = rational({{3, 1}, {4, 0}});
  const auto x = solve(a, b);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      mpq_class s = 0;
      for (std::size_t k = 0; k < 2; ++k) s += a(r, k) * x(k, c);
      CHECK(s == b(r, c));
    }
  }
  CHECK(x(0, 0) == 1);
  CHECK(x(1, 1) == mpq_class(-1, 5));
  CHECK_THROWS_AS(solve(rational({{1, 2}, {2, 4}}), rational({{1}, {1}})), Error);
}

TEST_CASE("elementary divisors") {
  CHECK(elementary_divisors(integer({{2, 0}, {0, 3}})) == std::vector<mpz_class>{1, 6});
  CHECK(elementary_divisors(integer({{2, 0}, {0, 4}})) == std::vector<mpz_class>{2, 4});
  CHECK(elementary_divisors(integer({{1, 2}, {3, 4}})) == std::vector<mpz_class>{1, 2});
  CHECK(elementary_divisors(integer({{3, 0}, {0, 0}, {1, 0}})) == std::vector<mpz_class>{1});
  CHECK(elementary_divisors(IntegerMatrix(2, 2)).empty());
  // The product of the divisors of a square non-singular matrix is |det|.
  const auto m = integer({{4, 6, 2}, {2, 8, 10}, {6, 2, 14}});
  mpz_class prod = 1;
  for (const auto& d : elementary_divisors(m)) prod *= d;
  CHECK(prod == abs(determinant(m)));
}

TEST_CASE("row denominators") {
  std::vector<mpz_class> scales;
  const auto m = clear_row_denominators(rational({{mpq_class(1, 2), mpq_class(1, 3)}, {2, 0}}), &scales);
  CHECK(m == integer({{3, 2}, {2, 0}}));
  CHECK(scales == std::vector<mpz_class>{6, 1});
}
