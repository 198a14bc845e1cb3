#include <doctest.h>

#include "hilbcup/error.hpp"
#include "hilbcup/hilbert.hpp"
#include "oracles.hpp"

using namespace hilbcup;

namespace {

PPoly mono(const Partition& powers, const mpq_class& c) { return PPoly::monomial(powers, c); }
ClassFunction chi(const Partition& lambda) { return ClassFunction::basis(lambda); }

ChernPoly chern(std::initializer_list<std::pair<Partition, long>> terms) {
  ChernPoly r;
  for (const auto& [m, c] : terms) r.add(m, mpz_class(c));
  return r;
}

std::vector<std::vector<mpq_class>> dense(const BasisMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.index.size(), std::vector<mpq_class>(m.index.size()));
  for (std::size_t r = 0; r < m.index.size(); ++r) {
    for (std::size_t c = 0; c < m.index.size(); ++c) out[r][c] = m.entries(r, c);
  }
  return out;
}

mpq_class det_A_product(int d) {
  mpq_class out = 1;
  for (const auto& lambda : oracle::partitions(d)) {
    for (int part : lambda) out /= mpq_class(oracle::factorial(part - 1));
  }
  return out;
}

mpq_class det_B_product(int d) {
  mpq_class out = 1;
  for (const auto& parts : oracle::partitions(d)) {
    const Partition lambda(parts);
    for (int i = 1; i <= d; ++i) {
      const int a = lambda.multiplicity(i);
      for (int k = 0; k < a; ++k) out /= mpq_class(oracle::factorial(i));
      out *= mpq_class(oracle::factorial(a));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("basis examples") {
  CHECK(basis_p(Partition{1, 1}, 4) == mono({2, 2}, mpq_class(1, 8)));
  CHECK(epsilon_monomial(Partition{1, 1}, 4) == 3 * chi(Partition{3, 1}) + 2 * chi(Partition{2, 2}));
  CHECK(basis_gamma(Partition{1, 1}, 4) == mono({3, 1}, 1) + mono({2, 2}, mpq_class(1, 4)));
  CHECK(basis_ch(Partition{2}, 4) == mono({3, 1}, mpq_class(1, 6)));
  CHECK_THROWS_AS(basis_p(Partition{1, 1}, 3), Error);
  CHECK(epsilon_monomial(Partition{3}, 3).is_zero());
}

TEST_CASE("matrix A and B at d = 2") {
  const auto a = matrix_A(2, 4);
  REQUIRE(a.index == std::vector<Partition>{{1, 1}, {2}});
  CHECK(a.entries(0, 0) == 1);
  CHECK(a.entries(0, 1) == mpq_class(1, 2));
  CHECK(a.entries(1, 0) == 0);
  CHECK(a.entries(1, 1) == -1);
  CHECK(abs(a.exact_determinant()) == 1);
  const auto b = matrix_B(2, 4);
  CHECK(b.at(Partition{1, 1}, Partition{1, 1}) == 2);
  CHECK(b.at(Partition{2}, Partition{1, 1}) == 3);
  CHECK(b.at(Partition{2}, Partition{2}) == mpq_class(1, 2));
  CHECK(abs(b.exact_determinant()) == 1);
  CHECK_THROWS_AS(matrix_A(3, 5), Error);
  CHECK_THROWS_AS(matrix_B(3, 5), Error);
}

TEST_CASE("determinant spot values") {
  CHECK(det_A_formula(2) == 1);
  CHECK(det_B_formula(2) == 1);
  CHECK(det_A_formula(3) == mpq_class(1, 2));
  CHECK(det_B_formula(3) == mpq_class(1, 2));
  CHECK(abs(matrix_A(3, 6).exact_determinant()) == mpq_class(1, 2));
  CHECK(abs(matrix_B(3, 6).exact_determinant()) == mpq_class(1, 2));
}

TEST_CASE("determinants match the product formulas") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(det_A_formula(d) == det_A_product(d));
    CHECK(det_B_formula(d) == det_B_product(d));
    const auto a = matrix_A(d, 2 * d);
    const auto b = matrix_B(d, 2 * d);
    const auto det_a = oracle::laplace_determinant(dense(a));
    const auto det_b = oracle::laplace_determinant(dense(b));
    CHECK(a.exact_determinant() == det_a);
    CHECK(b.exact_determinant() == det_b);
    CHECK(abs(det_a) == det_A_product(d));
    CHECK(abs(det_b) == det_B_product(d));
    CHECK(abs(det_a / det_b) == 1);
  }
}

TEST_CASE("A and B are triangular with the stated diagonals") {
  for (int d = 1; d <= 5; ++d) {
    const auto a = matrix_A(d, 2 * d);
    const auto b = matrix_B(d, 2 * d);
    // The index runs from (1^d) down to (d). A(mu, lambda) vanishes for
    // mu < lambda, B(mu, lambda) for mu' < lambda'.
    for (std::size_t r = 0; r < a.index.size(); ++r) {
      CHECK(a.entries(r, r) == diagonal_A(a.index[r]));
      CHECK(b.entries(r, r) == diagonal_B(b.index[r]));
      for (std::size_t c = 0; c < a.index.size(); ++c) {
        if (r > c) CHECK(a.entries(r, c) == 0);
        const auto mu = associate(b.index[r], 2 * d);
        const auto lambda = associate(b.index[c], 2 * d);
        if (lex_compare(mu, lambda) < 0) CHECK(b.entries(r, c) == 0);
      }
    }
  }
}

TEST_CASE("relation polynomial examples") {
  CHECK(relation_poly(Partition{1}) == chern({{{1}, -1}}));
  CHECK(relation_poly(Partition{1, 1}) == chern({{{2}, 3}, {{1, 1}, -1}}));
  CHECK(relation_poly(Partition{2}) == chern({{{1, 1}, 1}, {{2}, -2}}));
  CHECK(relation_poly(Partition{1, 1}).to_string() == "3*c2 - c1^2");
  CHECK(evaluate(relation_poly(Partition{1, 1}), 4) == chi(Partition{2, 2}));
  CHECK(evaluate(relation_poly(Partition{2}), 4) == chi(Partition{3, 1}));
  CHECK(evaluate(relation_poly(Partition{1}), 5) == tau(5));
  CHECK_THROWS_AS(relation_poly(Partition{2}, 3), Error);
}

TEST_CASE("relation polynomials are stable and integral") {
  for (int d = 1; d <= 5; ++d) {
    for (const auto& lambda : enumerate(d)) {
      const auto r = relation_poly(lambda);
      CHECK(r.weighted_degree() == d);
      for (int n = 2 * d + 1; n <= std::min(2 * d + 3, 12); ++n) CHECK(relation_poly(lambda, n) == r);
    }
  }
}

TEST_CASE("relation evaluation") {
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= 5; ++d) {
      for (const auto& lambda : enumerate(d)) {
        const auto value = evaluate(relation_poly(lambda), n);
        if (associate_threshold(lambda) > n) {
          CHECK(value.is_zero());
        } else {
          CHECK(value == chi(associate(lambda, n)));
        }
      }
    }
  }
}

TEST_CASE("presentation examples") {
  const auto pres = presentation(3, 2);
  CHECK(pres.generators == std::vector<int>{1, 2});
  CHECK(pres.betti == std::vector<std::uint64_t>{1, 1, 1});
  bool has_11 = false, has_2 = false;
  for (const auto& rel : pres.relations) {
    CHECK(associate_threshold(rel.lambda) > 3);
    if (rel.lambda == Partition{1, 1}) {
      has_11 = true;
      CHECK(rel.poly == chern({{{2}, 3}, {{1, 1}, -1}}));
    }
    has_2 = has_2 || rel.lambda == Partition{2};
  }
  CHECK(has_11);
  CHECK_FALSE(has_2);
  CHECK(pres.verified);
  CHECK(3 * epsilon_component(3, 2) - cup(tau(3), tau(3)) == ClassFunction(3));
  CHECK(evaluate(relation_poly(Partition{2}), 3) == chi(Partition{3}));
  for (int n = 1; n <= 6; ++n) {
    const auto pn = presentation(n);
    CHECK(pn.verified);
    CHECK(pn.degree_bound == n);
  }
}

TEST_CASE("betti numbers") {
  CHECK(betti(1) == std::vector<std::uint64_t>{1});
  CHECK(betti(4) == std::vector<std::uint64_t>{1, 1, 2, 1});
  for (int n = 1; n <= 12; ++n) {
    const auto b = betti(n);
    std::uint64_t total = 0;
    for (auto x : b) total += x;
    CHECK(total == count_partitions(n));
    for (int i = 0; i < n; ++i) {
      std::uint64_t dim = 0;
      for (const auto& lambda : enumerate(n)) dim += degree(lambda) == i;
      CHECK(b[static_cast<std::size_t>(i)] == dim);
    }
  }
}

TEST_CASE("graded rank examples") {
  const auto r3 = graded_rank_check(3, 2);
  REQUIRE(r3.entries.size() == 3);
  CHECK(r3.entries[0].rank == 1);
  CHECK(r3.entries[2].rank == 1);
  CHECK(r3.entries[2].expected == 1);
  CHECK(r3.entries[2].unimodular);
  CHECK(epsilon_monomial(Partition{1, 1}, 3) == 3 * chi(Partition{3}));
  CHECK(epsilon_monomial(Partition{2}, 3) == chi(Partition{3}));
  const auto r4 = graded_rank_check(4, 2);
  CHECK(r4.entries[2].rank == 2);
  CHECK(r4.passed);
  for (int n = 1; n <= 7; ++n) {
    const auto r = graded_rank_check(n, n - 1);
    CHECK(r.passed);
    for (const auto& e : r.entries) {
      CHECK(e.rank == count_into_parts(n, n - e.d));
      CHECK(e.unimodular);
    }
  }
}

TEST_CASE("chern poly formatting") {
  CHECK(relation_poly(Partition{1}).to_string() == "-c1");
  CHECK(ChernPoly{}.to_string() == "0");
}
