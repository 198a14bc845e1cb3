#include "hilbcup/ppoly.hpp"

#include <functional>
#include <mutex>

#include "hilbcup/error.hpp"
#include "hilbcup/linalg.hpp"

namespace hilbcup {

PPoly PPoly::monomial(const Partition& powers, const mpq_class& c) {
  PPoly q;
  q.add(powers, c);
  return q;
}

mpq_class PPoly::coefficient(const Partition& powers) const {
  auto it = terms_.find(powers);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void PPoly::add(const Partition& powers, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(powers, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> PPoly::homogeneous_weight() const {
  if (terms_.empty()) return 0;
  const int w = terms_.begin()->first.weight();
  // Keys are ordered by weight first.
  if (terms_.rbegin()->first.weight() != w) return std::nullopt;
  return w;
}

int PPoly::max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

PPoly PPoly::weight_component(int n) const {
  PPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.weight() == n) out.terms_.emplace(m, c);
  }
  return out;
}

PPoly& PPoly::operator+=(const PPoly& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

PPoly& PPoly::operator-=(const PPoly& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

PPoly& PPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, value] : terms_) value *= c;
  return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
  PPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto parts = ma.parts();
      parts.insert(parts.end(), mb.parts().begin(), mb.parts().end());
      out.add(Partition(std::move(parts)), ca * cb);
    }
  }
  return out;
}

std::string PPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (int p : m.parts()) s += "*p" + std::to_string(p);
  }
  return s;
}

PPoly multiply_by_p(int m, const PPoly& q) {
  PPoly out;
  for (const auto& [mono, c] : q.terms()) out.add(mono.with_part(m), c);
  return out;
}

PPoly differentiate(int i, const PPoly& q) {
  PPoly out;
  for (const auto& [mono, c] : q.terms()) {
    const int beta = mono.multiplicity(i);
    if (beta == 0) continue;
    out.add(*mono.without_part(i), c * beta);
  }
  return out;
}

namespace {

template <class Coeff>
PPoly phi_impl(const BasicClassFunction<Coeff>& f) {
  PPoly out;
  for (const auto& [lambda, c] : f.coeffs()) out.add(lambda, mpq_class(c) / mpq_class(z_value(lambda)));
  return out;
}

std::vector<int> distinct_parts(const Partition& mono) {
  std::vector<int> out;
  for (int p : mono.parts()) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

}  // namespace

// prod_i (1/alpha_i!)(p_i/i)^alpha_i = p_lambda / z_lambda
PPoly phi(const ClassFunction& f) { return phi_impl(f); }
PPoly phi(const RationalClassFunction& f) { return phi_impl(f); }

RationalClassFunction phi_inverse(const PPoly& q, std::optional<int> n) {
  const auto w = q.homogeneous_weight();
  if (!w) throw Error(ErrorCode::MixedWeight, "phi_inverse of " + q.to_string());
  const int weight = q.is_zero() ? n.value_or(0) : *w;
  if (n && *n != weight) {
    throw Error(ErrorCode::MixedWeight,
                "phi_inverse: weight " + std::to_string(weight) + " requested as " + std::to_string(*n));
  }
  RationalClassFunction out(weight);
  for (const auto& [lambda, c] : q.terms()) out.add(lambda, c * mpq_class(z_value(lambda)));
  return out;
}

PPoly delta_prime(const PPoly& q) {
  PPoly out;
  const mpq_class half(1, 2);
  for (const auto& [mono, c] : q.terms()) {
    const auto parts = distinct_parts(mono);
    for (int i : parts) {
      const auto after_i = *mono.without_part(i);
      const int beta_i = mono.multiplicity(i);
      for (int j : parts) {
        const int beta_j = after_i.multiplicity(j);
        if (beta_j == 0) continue;
        const auto rest = *after_i.without_part(j);
        out.add(rest.with_part(i + j), half * c * (i * j) * beta_i * beta_j);
      }
    }
  }
  return out;
}

PPoly delta_doubleprime(const PPoly& q) {
  PPoly out;
  const mpq_class half(1, 2);
  for (const auto& [mono, c] : q.terms()) {
    for (int k : distinct_parts(mono)) {
      const auto rest = *mono.without_part(k);
      const int beta_k = mono.multiplicity(k);
      for (int i = 1; i < k; ++i) out.add(rest.with_part(i).with_part(k - i), half * c * k * beta_k);
    }
  }
  return out;
}

PPoly goulden_delta(const PPoly& q) { return delta_prime(q) + delta_doubleprime(q); }

PPoly d_component(int i, const PPoly& q) {
  if (i < 0) throw Error(ErrorCode::OutOfRange, "d_component needs i >= 0");
  // Summing over ordered tuples (n_0..n_i) collapses to sub-multisets S of
  // the monomial's parts of size i + 1:
  //   D_i p^beta = (-1)^i sum_S prod_k C(beta_k, s_k) k^s_k p_|S| p^(beta - s)
  PPoly out;
  const int sign = (i % 2) ? -1 : 1;
  for (const auto& [mono, c] : q.terms()) {
    if (mono.length() < i + 1) continue;
    const auto parts = distinct_parts(mono);
    std::vector<int> take(parts.size(), 0);
    std::function<void(std::size_t, int)> choose = [&](std::size_t idx, int remaining) {
      if (remaining == 0) {
        mpz_class factor = sign;
        std::vector<int> rest;
        int removed_weight = 0;
        for (std::size_t t = 0; t < parts.size(); ++t) {
          const int beta = mono.multiplicity(parts[t]);
          if (take[t]) {
            mpz_class binom, power;
            mpz_bin_uiui(binom.get_mpz_t(), beta, take[t]);
            mpz_ui_pow_ui(power.get_mpz_t(), parts[t], take[t]);
            factor *= binom * power;
            removed_weight += parts[t] * take[t];
          }
          rest.insert(rest.end(), beta - take[t], parts[t]);
        }
        rest.push_back(removed_weight);
        out.add(Partition(std::move(rest)), c * factor);
        return;
      }
      if (idx == parts.size()) return;
      const int beta = mono.multiplicity(parts[idx]);
      for (int s = std::min(beta, remaining); s >= 0; --s) {
        take[idx] = s;
        choose(idx + 1, remaining - s);
      }
      take[idx] = 0;
    };
    choose(0, i + 1);
  }
  return out;
}

PPoly d_operator(const PPoly& q, std::optional<int> weight_bound) {
  const int bound = weight_bound.value_or(q.max_weight());
  PPoly out;
  // t^{-m} coefficient of exp(-sum_k k d_k t^-k) is
  //   sum_r (-1)^r / r! sum_{k_1 + ... + k_r = m} prod_j k_j d_{k_j}
  // which is then multiplied by -p_m.
  std::function<void(int, int, const PPoly&, int)> expand = [&](int m, int remaining, const PPoly& acc,
                                                               int r) {
    if (acc.is_zero()) return;
    if (remaining == 0) {
      mpq_class coeff(r % 2 ? 1 : -1);
      coeff /= mpq_class(factorial(r));
      out += coeff * multiply_by_p(m, acc);
      return;
    }
    for (int k = 1; k <= remaining; ++k) expand(m, remaining - k, mpq_class(k) * differentiate(k, acc), r + 1);
  };
  for (int m = 1; m <= bound; ++m) expand(m, m, q, 0);
  return out;
}

PPoly epsilon_series_coefficient(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "epsilon_series_coefficient needs n >= 0");
  static std::mutex mutex;
  static std::vector<PPoly> cache{PPoly::constant(1)};
  std::lock_guard lock(mutex);
  // E' = S' E gives n E_n = sum_{m=1..n} (-1)^{m-1} p_m E_{n-m}.
  while (static_cast<int>(cache.size()) <= n) {
    const int k = static_cast<int>(cache.size());
    PPoly next;
    for (int m = 1; m <= k; ++m) {
      PPoly term = multiply_by_p(m, cache[k - m]);
      if (m % 2 == 0) term *= -1;
      next += term;
    }
    next *= mpq_class(1, k);
    cache.push_back(std::move(next));
  }
  return cache[n];
}

PPoly chern_operator(int k, const PPoly& q) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "chern_operator needs k >= 0");
  if (!q.homogeneous_weight()) throw Error(ErrorCode::MixedWeight, "chern_operator of " + q.to_string());
  if (k == 0) return q;
  PPoly out;
  for (int j = 1; j <= k; ++j) {
    PPoly power_sum = mpq_class(factorial(j)) * d_component(j, q);
    PPoly term = chern_operator(k - j, power_sum);
    if (j % 2 == 0) term *= -1;
    out += term;
  }
  out *= mpq_class(1, k);
  return out;
}

std::vector<mpq_class> monomial_coordinates(const PPoly& q, int n) {
  const auto basis = enumerate(n);
  std::vector<mpq_class> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(q.coefficient(m));
  if (q.homogeneous_weight() != std::optional<int>(n) && !q.is_zero()) {
    throw Error(ErrorCode::MixedWeight, "monomial_coordinates: expected weight " + std::to_string(n));
  }
  return out;
}

namespace {

// X = [Delta', p_1]
PPoly commutator_x(const PPoly& q) { return delta_prime(multiply_by_p(1, q)) - multiply_by_p(1, delta_prime(q)); }

}  // namespace

std::vector<IdentityCheck> commutator_checks(int weight_bound) {
  std::vector<IdentityCheck> checks;

  {
    IdentityCheck check{"[Delta',p1] = sum_j j p_{j+1} d_j", true, ""};
    for (int w = 0; w <= weight_bound && check.passed; ++w) {
      for (const auto& mono : enumerate(w)) {
        const PPoly q = PPoly::monomial(mono);
        PPoly expected;
        for (int j = 1; j <= w; ++j) expected += mpq_class(j) * multiply_by_p(j + 1, differentiate(j, q));
        if (commutator_x(q) != expected) {
          check.passed = false;
          check.detail = "on " + q.to_string() + ": " + commutator_x(q).to_string() + " vs " + expected.to_string();
          break;
        }
      }
    }
    checks.push_back(std::move(check));
  }

  {
    // ad(X)^{n-1}(p_1) q = sum_k C(n-1,k) (-1)^k X^{n-1-k} p_1 X^k q
    IdentityCheck check{"ad([Delta',p1])^{n-1}(p1) = (n-1)! p_n", true, ""};
    for (int n = 1; n <= weight_bound && check.passed; ++n) {
      for (int w = 0; w <= weight_bound && check.passed; ++w) {
        for (const auto& mono : enumerate(w)) {
          const PPoly q = PPoly::monomial(mono);
          std::vector<PPoly> powers{q};
          for (int k = 1; k < n; ++k) powers.push_back(commutator_x(powers.back()));
          PPoly lhs;
          for (int k = 0; k < n; ++k) {
            PPoly term = multiply_by_p(1, powers[k]);
            for (int t = 0; t < n - 1 - k; ++t) term = commutator_x(term);
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), n - 1, k);
            lhs += mpq_class(k % 2 ? -binom : binom) * term;
          }
          const PPoly rhs = mpq_class(factorial(n - 1)) * multiply_by_p(n, q);
          if (lhs != rhs) {
            check.passed = false;
            check.detail = "n=" + std::to_string(n) + " on " + q.to_string();
            break;
          }
        }
      }
    }
    checks.push_back(std::move(check));
  }

  {
    IdentityCheck check{"P_n = Delta'(P_n) + p1 P_{n-1}", true, ""};
    for (int n = 1; n <= weight_bound; ++n) {
      const auto basis_n = enumerate(n);
      const auto basis_prev = enumerate(n - 1);
      RationalMatrix span(basis_n.size() + basis_prev.size(), basis_n.size());
      std::size_t row = 0;
      auto put = [&](const PPoly& q) {
        const auto coords = monomial_coordinates(q, n);
        for (std::size_t c = 0; c < coords.size(); ++c) span(row, c) = coords[c];
        ++row;
      };
      for (const auto& m : basis_n) put(delta_prime(PPoly::monomial(m)));
      for (const auto& m : basis_prev) put(multiply_by_p(1, PPoly::monomial(m)));
      if (rank(span) != basis_n.size()) {
        check.passed = false;
        check.detail = "rank deficient at n=" + std::to_string(n);
        break;
      }
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace hilbcup
