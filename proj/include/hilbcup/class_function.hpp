#pragma once

#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "hilbcup/partition.hpp"

namespace hilbcup {

// Which algorithm computes structure constants of the class algebra.
//   BruteForce: enumerate S_n (n <= bruteforce_limit()).
//   Character:  character-table formula.
//   Auto:       BruteForce for n <= 5, Character otherwise.
enum class Engine { BruteForce, Character, Auto };

Engine resolve_engine(Engine engine, int n) noexcept;
constexpr int bruteforce_limit() noexcept { return 8; }

// Class function on S_n in the basis chi_lambda of class indicator sums.
// Zero coefficients are never stored; keys are partitions of exactly n.
// Coeff is mpz_class for integral class functions and mpq_class for the
// rational variant.
template <class Coeff>
class BasicClassFunction {
 public:
  using Map = std::map<Partition, Coeff, CanonicalOrder>;

  explicit BasicClassFunction(int n = 0) : n_(n) {}
  // chi_lambda
  static BasicClassFunction basis(const Partition& lambda, const Coeff& c = Coeff(1)) {
    BasicClassFunction f(lambda.weight());
    f.add(lambda, c);
    return f;
  }

  int n() const noexcept { return n_; }
  const Map& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Coeff coefficient(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Coeff(0) : it->second;
  }

  // Throws Error(WeightMismatch) if |lambda| != n.
  void add(const Partition& lambda, const Coeff& c);

  BasicClassFunction degree_component(int d) const;
  // Degree if all terms share one, 0 for the zero function.
  std::optional<int> homogeneous_degree() const;

  BasicClassFunction& operator+=(const BasicClassFunction& other);
  BasicClassFunction& operator-=(const BasicClassFunction& other);
  BasicClassFunction& operator*=(const Coeff& c);
  friend BasicClassFunction operator+(BasicClassFunction a, const BasicClassFunction& b) { return a += b; }
  friend BasicClassFunction operator-(BasicClassFunction a, const BasicClassFunction& b) { return a -= b; }
  friend BasicClassFunction operator*(const Coeff& c, BasicClassFunction a) { return a *= c; }
  BasicClassFunction operator-() const { return Coeff(-1) * *this; }

  friend bool operator==(const BasicClassFunction& a, const BasicClassFunction& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void check_weight(const BasicClassFunction& other) const;

  int n_;
  Map coeffs_;
};

using ClassFunction = BasicClassFunction<mpz_class>;
using RationalClassFunction = BasicClassFunction<mpq_class>;
using StructureConstants = std::map<Partition, mpz_class, CanonicalOrder>;

RationalClassFunction to_rational(const ClassFunction& f);
// Throws Error(NonIntegerResult) when some coefficient is not an integer.
ClassFunction to_integral(const RationalClassFunction& f);

// a_{lambda mu}^nu: the number of pairs (a, b), a of type lambda, b of type
// mu, with ab equal to a fixed permutation of type nu. Only non-zero entries.
StructureConstants structure_constants(const Partition& lambda, const Partition& mu,
                                       Engine engine = Engine::Auto);

// Convolution product of the group ring restricted to class functions.
template <class Coeff>
BasicClassFunction<Coeff> convolve(const BasicClassFunction<Coeff>& f, const BasicClassFunction<Coeff>& g,
                                   Engine engine = Engine::Auto);

// Graded (cup) product: the part of f * g whose degree is the sum of the
// input degrees, taken over homogeneous components.
template <class Coeff>
BasicClassFunction<Coeff> cup(const BasicClassFunction<Coeff>& f, const BasicClassFunction<Coeff>& g,
                              Engine engine = Engine::Auto);

ClassFunction unit(int n);
// Sum of all transpositions; zero for n < 2.
ClassFunction tau(int n);
// Alternating character sum sgn(pi) pi.
ClassFunction epsilon(int n);
// Degree-i slice of epsilon(n). Throws Error(OutOfRange) unless
// 0 <= i <= max(n - 1, 0).
ClassFunction epsilon_component(int n, int i);

// Restriction to S_{n-1}: chi_lambda -> chi_mu if lambda = mu + (1), else 0.
template <class Coeff>
BasicClassFunction<Coeff> restrict(const BasicClassFunction<Coeff>& f);

// r_m(chi_mu) = m (alpha_m(mu) + 1) chi_{mu + (m)}; multiplication by p_m on
// the power-sum side.
template <class Coeff>
BasicClassFunction<Coeff> induce_r(int m, const BasicClassFunction<Coeff>& f);

struct EpsCommutatorWitness {
  bool holds;
  RationalClassFunction lhs;
  RationalClassFunction rhs;
};

// eps_{n+1} u r1(f) - r1(eps_n u f) == -tau_{n+1} u r1(eps_n u f) + r1(tau_n u eps_n u f)
EpsCommutatorWitness verify_eps_commutator(const RationalClassFunction& f, Engine engine = Engine::Auto);

}  // namespace hilbcup
