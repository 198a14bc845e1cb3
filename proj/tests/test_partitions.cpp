#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "hilbcup/error.hpp"
#include "hilbcup/partition.hpp"
#include "oracles.hpp"

using namespace hilbcup;

TEST_CASE("partition construction") {
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition{}.empty());
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_THROWS_AS(Partition({-1}), Error);
  const Partition p{3, 1, 1};
  CHECK(p.weight() == 5);
  CHECK(p.length() == 3);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(2) == 0);
  CHECK(p.with_part(2) == Partition{3, 2, 1, 1});
  CHECK(p.without_part(1) == Partition{3, 1});
  CHECK_FALSE(p.without_part(2).has_value());
  CHECK(Partition::from_multiplicities({0, 2, 0, 1}) == p);
  CHECK(Partition::ones(3) == Partition{1, 1, 1});
  CHECK(p.to_string() == "(3,1,1)");
}

TEST_CASE("enumerate examples") {
  CHECK(enumerate(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(enumerate(4).size() == 5);
}

TEST_CASE("enumerate agrees with recursive generation") {
  for (int n = 0; n <= 14; ++n) {
    const auto list = enumerate(n);
    std::set<std::vector<int>> seen;
    for (const auto& p : list) seen.insert(p.parts());
    CHECK(seen.size() == list.size());
    CHECK(seen == oracle::partitions(n));
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(lex_compare(list[i - 1], list[i]) < 0);
  }
}

TEST_CASE("count_into_parts examples") {
  for (int n = 1; n <= 10; ++n) CHECK(count_into_parts(n, n) == 1);
  CHECK(count_into_parts(4, 2) == 2);
  CHECK(count_into_parts(3, 0) == 0);
  CHECK(count_into_parts(0, 0) == 1);
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      std::uint64_t filtered = 0;
      for (const auto& p : oracle::partitions(n)) filtered += static_cast<int>(p.size()) == k;
      CHECK(count_into_parts(n, k) == filtered);
    }
  }
}

TEST_CASE("degree and z_value examples") {
  CHECK(degree(Partition::ones(5)) == 0);
  CHECK(degree(Partition{2, 1}) == 1);
  CHECK(degree(Partition{3}) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(z_value(Partition{n}) == n);
  CHECK(z_value(Partition{2, 1}) == 2);
  CHECK(class_size(Partition{2, 1}) == 3);
  CHECK(z_value(Partition{1, 1, 1}) == 6);
  CHECK(z_value(Partition{}) == 1);
  CHECK(degree(Partition{}) == 0);
}

TEST_CASE("class sizes count permutations by cycle type") {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, long> counts;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ++counts[oracle::cycle_type(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& lambda : enumerate(n)) CHECK(class_size(lambda) == counts[lambda.parts()]);
  }
}

TEST_CASE("associate examples") {
  CHECK(associate(Partition{1}, 3) == Partition{2, 1});
  CHECK(associate(Partition{2}, 4) == Partition{3, 1});
  CHECK_THROWS_AS(associate(Partition{1, 1}, 3), Error);
  try {
    associate(Partition{1, 1}, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Infeasible);
  }
  CHECK_FALSE(try_associate(Partition{1, 1}, 3).has_value());
  CHECK(associate(Partition{}, 3) == Partition::ones(3));
  CHECK(deassociate(Partition{3, 1}) == Partition{2});
}

TEST_CASE("associate follows the multiplicity formula") {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 0; d <= n; ++d) {
      for (const auto& lambda : enumerate(d)) {
        int sum = 0;
        for (int i = 1; i <= d; ++i) sum += lambda.multiplicity(i);
        const int alpha1 = n - d - sum;
        CHECK((associate_threshold(lambda) <= n) == (alpha1 >= 0));
        const auto nu = try_associate(lambda, n);
        CHECK(nu.has_value() == (alpha1 >= 0));
        if (!nu) continue;
        CHECK(nu->multiplicity(1) == alpha1);
        for (int i = 2; i <= n; ++i) CHECK(nu->multiplicity(i) == lambda.multiplicity(i - 1));
        CHECK(nu->weight() == n);
      }
    }
  }
}

TEST_CASE("lex_compare examples") {
  CHECK(lex_compare(Partition{1, 1}, Partition{2}) > 0);
  CHECK(lex_compare(Partition{2, 1}, Partition{3}) > 0);
  CHECK(lex_compare(Partition{3, 1}, Partition{3, 1}) == 0);
  CHECK_THROWS_AS(lex_compare(Partition{2}, Partition{2, 1}), Error);
  for (int d = 1; d <= 8; ++d) {
    const auto list = enumerate(d);
    CHECK(list.front() == Partition{d});
    CHECK(list.back() == Partition::ones(d));
  }
}

TEST_CASE("partition invariants") {
  for (int n = 0; n <= 30; ++n) {
    std::uint64_t sum = 0;
    for (int k = 0; k <= n; ++k) sum += count_into_parts(n, k);
    CHECK(sum == enumerate(n).size());
    CHECK(count_partitions(n) == sum);
  }
  for (int n = 0; n <= 12; ++n) {
    mpz_class total = 0;
    for (const auto& lambda : enumerate(n)) total += factorial(n) / z_value(lambda);
    CHECK(total == factorial(n));
  }
  for (int n = 1; n <= 12; ++n) {
    std::set<Partition> images;
    std::size_t feasible = 0;
    for (int d = 0; d <= n; ++d) {
      for (const auto& lambda : enumerate(d)) {
        if (auto nu = try_associate(lambda, n)) {
          CHECK(degree(*nu) == d);
          CHECK(deassociate(*nu) == lambda);
          images.insert(*nu);
          ++feasible;
        }
      }
    }
    CHECK(images.size() == feasible);
    CHECK(feasible == count_partitions(n));
  }
  for (int n = 0; n <= 20; ++n) {
    std::map<int, std::uint64_t> by_degree;
    for (const auto& lambda : enumerate(n)) ++by_degree[degree(lambda)];
    for (int d = 0; d <= n; ++d) CHECK(by_degree[d] == count_into_parts(n, n - d));
  }
}
