#pragma once
// Reference implementations used only by the tests. Each one follows a
// textbook definition and shares no code with the library beyond the value
// types it returns.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "hilbcup/partition.hpp"
#include "hilbcup/ppoly.hpp"

namespace oracle {

using hilbcup::Partition;

// Partitions of n as part lists, generated with parts bounded by `max_part`.
inline void partitions_rec(int n, int max_part, std::vector<int>& prefix, std::set<std::vector<int>>& out) {
  if (n == 0) {
    out.insert(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

inline std::set<std::vector<int>> partitions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> type;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// Consecutive-cycle representative of a cycle type.
inline std::vector<int> representative(const std::vector<int>& type) {
  std::vector<int> perm;
  int start = 0;
  for (int len : type) {
    for (int k = 0; k < len; ++k) perm.push_back(start + (k + 1) % len);
    start += len;
  }
  return perm;
}

// a_{lambda mu}^nu = #{a of type lambda : a^{-1} sigma_nu has type mu}, by
// running over all of S_n.
inline std::map<std::vector<int>, long> structure_constants(const std::vector<int>& lambda,
                                                            const std::vector<int>& mu, int n) {
  std::map<std::vector<int>, long> out;
  for (const auto& nu : partitions(n)) {
    const auto sigma = representative(nu);
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    long count = 0;
    do {
      if (cycle_type(a) != lambda) continue;
      std::vector<int> inv(a.size()), b(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
      for (std::size_t i = 0; i < a.size(); ++i) b[i] = inv[static_cast<std::size_t>(sigma[i])];
      if (cycle_type(b) == mu) ++count;
    } while (std::next_permutation(a.begin(), a.end()));
    if (count) out[nu] = count;
  }
  return out;
}

// Coefficient of x^e in p_mu(x_1..x_k): ways to send each part of mu to a
// variable so that the exponents add up to e.
inline long power_sum_coefficient(const std::vector<int>& mu, std::size_t idx, std::vector<int>& e) {
  if (idx == mu.size()) return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }) ? 1 : 0;
  long total = 0;
  for (auto& x : e) {
    if (x < mu[idx]) continue;
    x -= mu[idx];
    total += power_sum_coefficient(mu, idx + 1, e);
    x += mu[idx];
  }
  return total;
}

// Frobenius formula: chi^lambda(mu) is the coefficient of x^(lambda + delta)
// in p_mu(x_1..x_k) * prod_{i<j} (x_i - x_j), with k = l(lambda). The
// Vandermonde factor is expanded as the alternant sum over S_k.
inline long frobenius_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const std::size_t k = std::max<std::size_t>(lambda.size(), 1);
  std::vector<int> target(k), w(k);
  for (std::size_t i = 0; i < k; ++i) target[i] = (i < lambda.size() ? lambda[i] : 0) + static_cast<int>(k - 1 - i);
  std::iota(w.begin(), w.end(), 0);
  long total = 0;
  do {
    std::vector<int> e(k);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      e[i] = target[i] - static_cast<int>(k - 1 - static_cast<std::size_t>(w[i]));
      ok = e[i] >= 0;
    }
    if (!ok) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += w[i] > w[j];
    }
    total += (inversions % 2 ? -1 : 1) * power_sum_coefficient(mu, 0, e);
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

inline mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Phi(chi_lambda) straight from the displayed product.
inline hilbcup::PPoly phi_basis(const Partition& lambda) {
  mpq_class c = 1;
  for (int i = 1; i <= lambda.weight(); ++i) {
    const int a = lambda.multiplicity(i);
    mpz_class den = factorial(a);
    for (int k = 0; k < a; ++k) den *= i;
    c /= den;
  }
  return hilbcup::PPoly::monomial(lambda, c);
}

// z^n coefficient of exp(X), X = sum_m (-1)^{m-1} z^m p_m / m, by summing
// X^k / k! and keeping track of the z-degree (equal to the weight).
inline hilbcup::PPoly exp_series_coefficient(int n) {
  using hilbcup::PPoly;
  PPoly x;
  for (int m = 1; m <= n; ++m) x += mpq_class(m % 2 == 1 ? 1 : -1, m) * PPoly::variable(m);
  PPoly total = PPoly::constant(1).weight_component(n);
  PPoly power = PPoly::constant(1);
  for (int k = 1; k <= n; ++k) {
    PPoly next;
    for (int w = 0; w <= n; ++w) next += (power * x).weight_component(w);
    power = next;
    total += mpq_class(1) / mpq_class(factorial(k)) * power.weight_component(n);
  }
  return total;
}

// D_i from its definition: sum over ordered tuples (n_0, ..., n_i) of positive
// integers, each derivative applied in turn.
inline hilbcup::PPoly d_component_by_tuples(int i, const hilbcup::PPoly& q) {
  using hilbcup::PPoly;
  const int w = q.max_weight();
  PPoly total;
  std::vector<int> tuple;
  std::function<void(int)> rec = [&](int used) {
    if (static_cast<int>(tuple.size()) == i + 1) {
      PPoly term = q;
      int sum = 0;
      for (int nj : tuple) {
        term = mpq_class(nj) * hilbcup::differentiate(nj, term);
        sum += nj;
      }
      total += hilbcup::multiply_by_p(sum, term);
      return;
    }
    for (int nj = 1; used + nj <= w; ++nj) {
      tuple.push_back(nj);
      rec(used + nj);
      tuple.pop_back();
    }
  };
  rec(0);
  mpq_class c(i % 2 == 0 ? 1 : -1);
  c /= mpq_class(factorial(i + 1));
  return c * total;
}

// Laplace expansion along the first row.
inline mpq_class laplace_determinant(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpq_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * laplace_determinant(minor);
  }
  return det;
}

}  // namespace oracle
