#include <doctest.h>

#include "hilbcup/characters.hpp"
#include "hilbcup/error.hpp"
#include "oracles.hpp"

using namespace hilbcup;

TEST_CASE("mn_character examples") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : enumerate(n)) CHECK(mn_character(Partition{n}, mu) == 1);
  }
  CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS_AS(mn_character(Partition{2, 1}, Partition{2}), Error);
}

TEST_CASE("character of the 2-dimensional representation of S3") {
  // Standard representation on {x in Q^3 : x1+x2+x3 = 0}: the character is
  // (number of fixed points) - 1.
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 3 - 1);
  CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 1 - 1);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == 0 - 1);
}

TEST_CASE("table examples") {
  const auto t1 = character_table(1);
  CHECK(t1->size() == 1);
  CHECK(t1->at(0, 0) == 1);
  const auto t3 = character_table(3);
  const Partition ones = Partition::ones(3);
  CHECK((*t3)(Partition{3}, ones) == 1);
  CHECK((*t3)(Partition{2, 1}, ones) == 2);
  CHECK((*t3)(Partition{1, 1, 1}, ones) == 1);
  const auto t5 = character_table(5);
  mpz_class burnside = 0;
  for (std::size_t r = 0; r < t5->size(); ++r) burnside += t5->dimension(r) * t5->dimension(r);
  CHECK(burnside == 120);
  CHECK(character_table(5) == t5);
}

TEST_CASE("table agrees with the Frobenius formula") {
  for (int n = 1; n <= 8; ++n) {
    const auto t = character_table(n);
    for (const auto& lambda : t->partitions()) {
      for (const auto& mu : t->partitions()) {
        CHECK((*t)(lambda, mu) == oracle::frobenius_character(lambda.parts(), mu.parts()));
      }
    }
  }
}

TEST_CASE("trivial and sign rows") {
  for (int n = 1; n <= 10; ++n) {
    const auto t = character_table(n);
    for (const auto& mu : t->partitions()) {
      CHECK((*t)(Partition{n}, mu) == 1);
      CHECK((*t)(Partition::ones(n), mu) == (degree(mu) % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("row and column orthogonality") {
  for (int n = 1; n <= 10; ++n) {
    const auto t = character_table(n);
    const auto& parts = t->partitions();
    const std::size_t k = t->size();
    std::vector<mpz_class> z(k);
    for (std::size_t c = 0; c < k; ++c) z[c] = z_value(parts[c]);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        mpq_class rows = 0;
        mpz_class cols = 0;
        for (std::size_t c = 0; c < k; ++c) {
          mpq_class term(t->at(a, c) * t->at(b, c), z[c]);
          term.canonicalize();
          rows += term;
          cols += t->at(c, a) * t->at(c, b);
        }
        CHECK(rows == (a == b ? 1 : 0));
        CHECK(cols == (a == b ? z[a] : mpz_class(0)));
      }
    }
  }
}

TEST_CASE("table size limit") {
  const int saved = character_table_limit();
  set_character_table_limit(4);
  CHECK_THROWS_AS(character_table(5), Error);
  try {
    character_table(5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  set_character_table_limit(saved);
  CHECK(character_table(5)->size() == 7);
}
