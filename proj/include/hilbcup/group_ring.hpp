#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "hilbcup/class_function.hpp"
#include "hilbcup/partition.hpp"

namespace hilbcup {

// A bijection of {0, ..., n-1}, stored as its image list. Only used by the
// brute-force engine, so n stays small.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Canonical element of the given cycle type: cycles on consecutive points.
  static Permutation of_type(const Partition& type);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  Partition cycle_type() const;
  int degree() const { return hilbcup::degree(cycle_type()); }
  // S_n -> S_{n+1}, fixing the new last point.
  Permutation embed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (sigma pi)(x) = sigma(pi(x))
Permutation compose(const Permutation& sigma, const Permutation& pi);

// All of S_n in lexicographic image order.
std::vector<Permutation> all_permutations(int n);

// Element of Z[S_n] as a sparse map permutation -> integer.
class GroupRingElement {
 public:
  explicit GroupRingElement(int n) : n_(n) {}
  static GroupRingElement from_class_function(const ClassFunction& f);

  int n() const noexcept { return n_; }
  const std::map<Permutation, mpz_class>& terms() const noexcept { return terms_; }
  void add(const Permutation& pi, const mpz_class& c);

  // Group ring product sum_{a,b} f(a) g(b) ab.
  GroupRingElement operator*(const GroupRingElement& other) const;
  // Graded product: a (x) b kept only when deg(a) + deg(b) = deg(ab).
  GroupRingElement cup(const GroupRingElement& other) const;
  GroupRingElement embed() const;
  // sum_{t in S_n} t x t^-1
  GroupRingElement conjugation_sum() const;

  bool is_class_function() const;
  // Throws Error(NonIntegerResult) if the element is not constant on classes.
  ClassFunction to_class_function() const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  int n_;
  std::map<Permutation, mpz_class> terms_;
};

// r_1 through the group ring: pi -> (1/n!) sum_{t in S_{n+1}} t iota(pi) t^-1.
ClassFunction induce_r1_bruteforce(const ClassFunction& f);

}  // namespace hilbcup
