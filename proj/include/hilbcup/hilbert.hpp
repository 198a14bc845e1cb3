#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hilbcup/class_function.hpp"
#include "hilbcup/linalg.hpp"
#include "hilbcup/partition.hpp"
#include "hilbcup/ppoly.hpp"

namespace hilbcup {

// Cup product of epsilon components, prod_i eps_n(i)^alpha_i(lambda).
// Components with i > n - 1 vanish.
ClassFunction epsilon_monomial(const Partition& lambda, int n, Engine engine = Engine::Auto);

// p_n^lambda = Phi(chi_{lambda'}) with lambda' = associate(lambda, n).
PPoly basis_p(const Partition& lambda, int n);
// gamma_n^lambda = Phi(epsilon_monomial(lambda, n)).
PPoly basis_gamma(const Partition& lambda, int n, Engine engine = Engine::Auto);
// ch_n^lambda = prod_i D_i^alpha_i (p_1^n / n!).
PPoly basis_ch(const Partition& lambda, int n);

// Coefficient matrix between two bases of Phi(C(S_n)(d)), n >= 2d. Rows and
// columns are partitions of d listed largest first in the multiplicity order:
// (1^d), ..., (d).
struct BasisMatrix {
  int d = 0;
  int n = 0;
  std::vector<Partition> index;
  RationalMatrix entries;  // entries(mu, lambda)

  const mpq_class& at(const Partition& mu, const Partition& lambda) const;
  mpq_class exact_determinant() const { return determinant(entries); }
};

// ch_n^lambda = sum_mu A(mu, lambda) gamma_n^mu
BasisMatrix matrix_A(int d, int n, Engine engine = Engine::Auto);
// ch_n^lambda = sum_mu B(mu, lambda) p_n^mu
BasisMatrix matrix_B(int d, int n);

// prod_{lambda |- d} prod_i (1/(i-1)!)^alpha_i
mpq_class det_A_formula(int d);
// prod_{lambda |- d} prod_i (1/i!)^alpha_i alpha_i!
mpq_class det_B_formula(int d);
// prod_i ((-1)^{i-1}/(i-1)!)^alpha_i
mpq_class diagonal_A(const Partition& lambda);
// prod_i alpha_i! ((-1)^i/i!)^alpha_i
mpq_class diagonal_B(const Partition& lambda);

// Integer polynomial in Chern generators c_1, c_2, .... The monomial
// prod_i c_i^e_i is keyed by the partition with multiplicities e_i, so its
// weighted degree is the partition weight.
class ChernPoly {
 public:
  using Map = std::map<Partition, mpz_class, CanonicalOrder>;

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Partition& monomial, const mpz_class& c);
  mpz_class coefficient(const Partition& monomial) const;
  // Weighted degree if homogeneous.
  std::optional<int> weighted_degree() const;

  friend bool operator==(const ChernPoly&, const ChernPoly&) = default;
  // e.g. "3*c2 - c1^2"
  std::string to_string() const;

 private:
  Map terms_;
};

// r_lambda: Phi(chi_{lambda'}) in the gamma-monomial basis, read as a
// polynomial in the c_i. Computed at weight n (default 2|lambda|, must be
// >= 2|lambda|). Throws Error(NonIntegerCoefficient) if integrality fails.
ChernPoly relation_poly(const Partition& lambda, std::optional<int> n = std::nullopt,
                        Engine engine = Engine::Auto);

// Substitutes c_i -> eps_n(i) with products taken by cup.
ClassFunction evaluate(const ChernPoly& poly, int n, Engine engine = Engine::Auto);

struct Relation {
  Partition lambda;
  ChernPoly poly;
};

struct Presentation {
  int n = 0;
  int degree_bound = 0;
  std::vector<int> generators;  // indices i of c_i
  std::vector<Relation> relations;
  std::vector<std::uint64_t> betti;
  bool verified = false;
  std::vector<std::string> failures;
};

// Generators c_1..c_{n-1}, relations r_lambda with sum_i (i+1) alpha_i > n and
// 1 <= |lambda| <= degree_bound (default n). Every r_lambda with
// |lambda| <= degree_bound is evaluated in C(S_n): relations must vanish, the
// others must give chi_{lambda'}.
Presentation presentation(int n, std::optional<int> degree_bound = std::nullopt,
                          Engine engine = Engine::Auto);

// [p(n, n - i)] for i = 0..n-1; [1] for n = 0.
std::vector<std::uint64_t> betti(int n);

struct GradedRankEntry {
  int d = 0;
  std::size_t rank = 0;
  std::uint64_t expected = 0;
  std::vector<mpz_class> divisors;
  bool rank_ok = false;
  bool unimodular = false;  // evaluation lattice equals C(S_n)(d)
};

struct GradedRankReport {
  int n = 0;
  std::vector<GradedRankEntry> entries;
  bool passed = false;
};

GradedRankReport graded_rank_check(int n, int degree_bound, Engine engine = Engine::Auto);

}  // namespace hilbcup
