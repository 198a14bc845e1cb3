#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hilbcup/class_function.hpp"
#include "hilbcup/partition.hpp"

namespace hilbcup {

// Polynomial in the power sums p_1, p_2, ... with rational coefficients.
// A monomial p_{l_1} ... p_{l_s} is keyed by the partition (l_1, ..., l_s):
// its conformal weight is the partition weight and its cohomological degree
// is degree(partition).
class PPoly {
 public:
  using Map = std::map<Partition, mpq_class, CanonicalOrder>;

  PPoly() = default;
  static PPoly monomial(const Partition& powers, const mpq_class& c = 1);
  static PPoly constant(const mpq_class& c) { return monomial(Partition{}, c); }
  // p_m
  static PPoly variable(int m) { return monomial(Partition{m}); }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpq_class coefficient(const Partition& powers) const;
  void add(const Partition& powers, const mpq_class& c);

  // Weight shared by all terms; nullopt for mixed weight, 0 for zero.
  std::optional<int> homogeneous_weight() const;
  int max_weight() const;
  PPoly weight_component(int n) const;

  PPoly& operator+=(const PPoly& other);
  PPoly& operator-=(const PPoly& other);
  PPoly& operator*=(const mpq_class& c);
  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
  friend PPoly operator*(const mpq_class& c, PPoly a) { return a *= c; }
  friend PPoly operator*(const PPoly& a, const PPoly& b);
  friend bool operator==(const PPoly&, const PPoly&) = default;

  std::string to_string() const;

 private:
  Map terms_;
};

// Multiplication by p_m.
PPoly multiply_by_p(int m, const PPoly& q);
// d/dp_i
PPoly differentiate(int i, const PPoly& q);

// Phi(chi_lambda) = prod_i (1/alpha_i!) (p_i / i)^alpha_i.
PPoly phi(const ClassFunction& f);
PPoly phi(const RationalClassFunction& f);
// Throws Error(MixedWeight) unless q is homogeneous of one weight. `n` fixes
// the weight of a zero input (default 0) and is checked otherwise.
RationalClassFunction phi_inverse(const PPoly& q, std::optional<int> n = std::nullopt);

// Delta' = 1/2 sum_{i,j} ij p_{i+j} d_i d_j
PPoly delta_prime(const PPoly& q);
// Delta'' = 1/2 sum_{i,j} (i+j) p_i p_j d_{i+j}
PPoly delta_doubleprime(const PPoly& q);
// Goulden's operator Delta' + Delta''.
PPoly goulden_delta(const PPoly& q);

// D_i = (-1)^i/(i+1)! sum_{n_0..n_i > 0} p_{n_0+...+n_i} prod_j n_j d_{n_j}
PPoly d_component(int i, const PPoly& q);
// Coefficient of t^0 in (-sum p_m t^m) exp(-sum m d_m t^-m), expanded
// term by term with p_m restricted to m <= weight_bound. With the default
// bound (the largest weight present) nothing is truncated.
PPoly d_operator(const PPoly& q, std::optional<int> weight_bound = std::nullopt);

// z^n coefficient of exp(sum_{m>0} (-1)^{m-1} z^m p_m / m).
PPoly epsilon_series_coefficient(int n);

// Operator counterpart of cup product with c_k, obtained from P_j = j! D_j by
// Newton's identities: k C_k = sum_{j=1..k} (-1)^{j-1} C_{k-j} P_j, C_0 = id.
// Throws Error(MixedWeight) on non-homogeneous input.
PPoly chern_operator(int k, const PPoly& q);

// Coordinates of a weight-n polynomial in the monomial basis enumerate(n).
std::vector<mpq_class> monomial_coordinates(const PPoly& q, int n);

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string detail;  // first counterexample when failing
};

// [Delta', p_1] = sum_j j p_{j+1} d_j and ad([Delta', p_1])^{n-1}(p_1) =
// (n-1)! p_n as operators on P_w, plus P_n = Delta'(P_n) + p_1 P_{n-1}, for
// all w, n <= weight_bound.
std::vector<IdentityCheck> commutator_checks(int weight_bound);

}  // namespace hilbcup
