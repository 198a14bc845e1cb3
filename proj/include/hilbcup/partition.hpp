#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hilbcup {

// A weakly decreasing sequence of positive integers. The empty partition is
// the unique partition of 0. Used as the index for conjugacy classes of S_n,
// for power-sum monomials p_lambda and for Chern monomials c^lambda.
class Partition {
 public:
  Partition() = default;
  // Parts are sorted into canonical order; non-positive parts are rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Builds (1^m_1 2^m_2 ...) from m[i] = multiplicity of part i (m[0] ignored).
  static Partition from_multiplicities(const std::vector<int>& mult);
  // (1^n)
  static Partition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  // alpha_i: number of parts equal to i.
  int multiplicity(int i) const noexcept;
  // Vector m with m[i] = alpha_i for 1 <= i <= weight; m[0] = 0.
  std::vector<int> multiplicities() const;

  Partition with_part(int part) const;
  // Removes one occurrence of `part`; nullopt if absent.
  std::optional<Partition> without_part(int part) const;

  std::string to_string() const;

  // Structural order for use as a container key; see CanonicalOrder for the
  // mathematically meaningful order.
  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n, ascending in lex_compare order: (n) first, (1^n) last.
std::vector<Partition> enumerate(int n);

// p(n, k): number of partitions of n into exactly k parts.
std::uint64_t count_into_parts(int n, int k);
// p(n)
std::uint64_t count_partitions(int n);

// |lambda| - l(lambda); the minimal number of transpositions of a permutation
// of this cycle type.
inline int degree(const Partition& lambda) noexcept { return lambda.weight() - lambda.length(); }

// Centralizer order prod_i i^alpha_i * alpha_i!.
mpz_class z_value(const Partition& lambda);
// |lambda|! / z_value(lambda)
mpz_class class_size(const Partition& lambda);
mpz_class factorial(int n);

// The associated partition of n: alpha'_1 = n - d - sum alpha_i, alpha'_i =
// alpha_{i-1}. Equivalently every part is raised by one and the result is
// padded with 1s. Throws Error(Infeasible) when alpha'_1 < 0.
Partition associate(const Partition& lambda, int n);
std::optional<Partition> try_associate(const Partition& lambda, int n);
// Inverse of associate on its image: drop parts equal to 1, lower the others.
Partition deassociate(const Partition& nu);
// sum_i (i + 1) alpha_i = |lambda| + l(lambda); associate(lambda, n) is
// feasible iff this is <= n.
inline int associate_threshold(const Partition& lambda) noexcept {
  return lambda.weight() + lambda.length();
}

// Lexicographic order of the multiplicity sequences (alpha_1, alpha_2, ...).
// Throws Error(WeightMismatch) for partitions of different weights.
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

// Weight first, then lex_compare. Total on all partitions; this is the key
// order of every sparse container in the library.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

}  // namespace hilbcup
