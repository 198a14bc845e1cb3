#include "hilbcup/hilbert.hpp"

#include <algorithm>
#include <mutex>

#include "hilbcup/characters.hpp"
#include "hilbcup/error.hpp"

namespace hilbcup {

namespace {

// Partitions of d from (1^d) down to (d).
std::vector<Partition> descending(int d) {
  auto parts = enumerate(d);
  std::reverse(parts.begin(), parts.end());
  return parts;
}

void require_stable(int d, int n) {
  if (n < 2 * d) {
    throw Error(ErrorCode::Infeasible,
                "n = " + std::to_string(n) + " is below the stable range n >= 2d = " + std::to_string(2 * d));
  }
}

// Coordinates of an element of Phi(C(S_n)(d)) in the basis p_n^mu, mu in `index`.
std::vector<mpq_class> p_coordinates(const PPoly& q, const std::vector<Partition>& index, int n) {
  const auto f = phi_inverse(q, n);
  std::vector<mpq_class> out;
  out.reserve(index.size());
  for (const auto& mu : index) out.push_back(f.coefficient(associate(mu, n)));
  return out;
}

RationalMatrix gamma_coordinates(const std::vector<Partition>& index, int n, Engine engine) {
  RationalMatrix g(index.size(), index.size());
  for (std::size_t col = 0; col < index.size(); ++col) {
    const auto eps = epsilon_monomial(index[col], n, engine);
    for (std::size_t row = 0; row < index.size(); ++row) g(row, col) = eps.coefficient(associate(index[row], n));
  }
  return g;
}

RationalMatrix ch_coordinates(const std::vector<Partition>& index, int n) {
  RationalMatrix c(index.size(), index.size());
  for (std::size_t col = 0; col < index.size(); ++col) {
    const auto coords = p_coordinates(basis_ch(index[col], n), index, n);
    for (std::size_t row = 0; row < index.size(); ++row) c(row, col) = coords[row];
  }
  return c;
}

}  // namespace

ClassFunction epsilon_monomial(const Partition& lambda, int n, Engine engine) {
  static std::mutex mutex;
  static std::map<std::tuple<int, Partition, Engine>, ClassFunction> cache;
  const Engine resolved = resolve_engine(engine, n);
  const auto key = std::tuple{n, lambda, resolved};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ClassFunction result(n);
  if (lambda.empty()) {
    result = unit(n);
  } else if (lambda.largest() <= std::max(n - 1, 0)) {
    const int i = lambda.largest();
    result = cup(epsilon_component(n, i), epsilon_monomial(*lambda.without_part(i), n, resolved), resolved);
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

PPoly basis_p(const Partition& lambda, int n) { return phi(ClassFunction::basis(associate(lambda, n))); }

PPoly basis_gamma(const Partition& lambda, int n, Engine engine) { return phi(epsilon_monomial(lambda, n, engine)); }

PPoly basis_ch(const Partition& lambda, int n) {
  PPoly q = PPoly::monomial(Partition::ones(n), mpq_class(1) / mpq_class(factorial(n)));
  // Parts in increasing order: D_1 first.
  for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) q = d_component(*it, q);
  return q;
}

const mpq_class& BasisMatrix::at(const Partition& mu, const Partition& lambda) const {
  const auto row = std::find(index.begin(), index.end(), mu);
  const auto col = std::find(index.begin(), index.end(), lambda);
  if (row == index.end() || col == index.end()) {
    throw Error(ErrorCode::WeightMismatch, "BasisMatrix index for d = " + std::to_string(d));
  }
  return entries(row - index.begin(), col - index.begin());
}

BasisMatrix matrix_A(int d, int n, Engine engine) {
  require_stable(d, n);
  BasisMatrix m{d, n, descending(d), {}};
  m.entries = solve(gamma_coordinates(m.index, n, engine), ch_coordinates(m.index, n));
  return m;
}

BasisMatrix matrix_B(int d, int n) {
  require_stable(d, n);
  BasisMatrix m{d, n, descending(d), {}};
  m.entries = ch_coordinates(m.index, n);
  return m;
}

mpq_class diagonal_A(const Partition& lambda) {
  mpq_class out = 1;
  for (int i : lambda.parts()) out *= mpq_class((i - 1) % 2 ? -1 : 1) / mpq_class(factorial(i - 1));
  return out;
}

mpq_class diagonal_B(const Partition& lambda) {
  mpq_class out = 1;
  const auto mult = lambda.multiplicities();
  for (std::size_t i = 1; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    out *= mpq_class(factorial(mult[i]));
    for (int k = 0; k < mult[i]; ++k) out *= mpq_class(i % 2 ? -1 : 1) / mpq_class(factorial(static_cast<int>(i)));
  }
  return out;
}

mpq_class det_A_formula(int d) {
  mpq_class out = 1;
  for (const auto& lambda : enumerate(d)) {
    for (int i : lambda.parts()) out /= mpq_class(factorial(i - 1));
  }
  return out;
}

mpq_class det_B_formula(int d) {
  mpq_class out = 1;
  for (const auto& lambda : enumerate(d)) {
    const auto mult = lambda.multiplicities();
    for (std::size_t i = 1; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), factorial(static_cast<int>(i)).get_mpz_t(), mult[i]);
      mpq_class factor(factorial(mult[i]), power);
      factor.canonicalize();
      out *= factor;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ChernPoly

void ChernPoly::add(const Partition& monomial, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class ChernPoly::coefficient(const Partition& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::optional<int> ChernPoly::weighted_degree() const {
  if (terms_.empty()) return 0;
  const int d = terms_.begin()->first.weight();
  if (terms_.rbegin()->first.weight() != d) return std::nullopt;
  return d;
}

std::string ChernPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest generator first: c2 before c1^2.
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const auto& [mono, c] = *it;
    mpz_class magnitude = abs(c);
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    std::string factors;
    const auto mult = mono.multiplicities();
    for (std::size_t i = mult.size(); i-- > 1;) {
      if (mult[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += "c" + std::to_string(i);
      if (mult[i] > 1) factors += "^" + std::to_string(mult[i]);
    }
    if (factors.empty()) {
      s += magnitude.get_str();
    } else {
      if (magnitude != 1) s += magnitude.get_str() + "*";
      s += factors;
    }
  }
  return s;
}

ChernPoly relation_poly(const Partition& lambda, std::optional<int> n_opt, Engine engine) {
  const int d = lambda.weight();
  if (d < 1) throw Error(ErrorCode::OutOfRange, "relation_poly needs |lambda| >= 1");
  const int n = n_opt.value_or(2 * d);
  require_stable(d, n);
  if (n > character_table_limit()) {
    throw Error(ErrorCode::BoundExceeded, "r_" + lambda.to_string() + " is solved at weight " + std::to_string(n) +
                                              ", above the character table limit " +
                                              std::to_string(character_table_limit()) +
                                              "; lower the degree bound or raise HILBCUP_MAX_N");
  }
  const auto index = descending(d);
  const RationalMatrix g = gamma_coordinates(index, n, engine);
  RationalMatrix target(index.size(), 1);
  const auto pos = std::find(index.begin(), index.end(), lambda) - index.begin();
  target(pos, 0) = 1;
  const RationalMatrix x = solve(g, target);

  ChernPoly out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (x(i, 0).get_den() != 1) {
      throw Error(ErrorCode::NonIntegerCoefficient,
                  "r_" + lambda.to_string() + " coefficient " + x(i, 0).get_str() + " at c^" + index[i].to_string());
    }
    out.add(index[i], x(i, 0).get_num());
  }
  return out;
}

ClassFunction evaluate(const ChernPoly& poly, int n, Engine engine) {
  ClassFunction out(n);
  for (const auto& [mono, c] : poly.terms()) out += c * epsilon_monomial(mono, n, engine);
  return out;
}

Presentation presentation(int n, std::optional<int> degree_bound, Engine engine) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "presentation needs n >= 1");
  Presentation p;
  p.n = n;
  p.degree_bound = degree_bound.value_or(n);
  if (p.degree_bound < 1) throw Error(ErrorCode::OutOfRange, "presentation needs degree bound >= 1");
  for (int i = 1; i < n; ++i) p.generators.push_back(i);
  p.betti = betti(n);

  for (int d = 1; d <= p.degree_bound; ++d) {
    for (const auto& lambda : descending(d)) {
      ChernPoly r = relation_poly(lambda, std::nullopt, engine);
      const ClassFunction value = evaluate(r, n, engine);
      const bool is_relation = associate_threshold(lambda) > n;
      const ClassFunction expected =
          is_relation ? ClassFunction(n) : ClassFunction::basis(associate(lambda, n));
      if (value != expected) {
        p.failures.push_back("r_" + lambda.to_string() + " evaluates to " + value.to_string() + ", expected " +
                             expected.to_string());
      }
      if (is_relation) p.relations.push_back({lambda, std::move(r)});
    }
  }
  p.verified = p.failures.empty();
  return p;
}

std::vector<std::uint64_t> betti(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "betti needs n >= 0");
  if (n == 0) return {1};
  std::vector<std::uint64_t> out;
  for (int i = 0; i < n; ++i) out.push_back(count_into_parts(n, n - i));
  return out;
}

GradedRankReport graded_rank_check(int n, int degree_bound, Engine engine) {
  GradedRankReport report;
  report.n = n;
  report.passed = true;
  const auto classes = enumerate(n);
  for (int d = 0; d <= degree_bound; ++d) {
    GradedRankEntry entry;
    entry.d = d;
    entry.expected = (n == 0 && d == 0) ? 1 : count_into_parts(n, n - d);

    std::vector<Partition> slice;
    for (const auto& nu : classes) {
      if (degree(nu) == d) slice.push_back(nu);
    }
    const auto monomials = enumerate(d);
    IntegerMatrix m(monomials.size(), slice.size());
    for (std::size_t r = 0; r < monomials.size(); ++r) {
      const auto value = epsilon_monomial(monomials[r], n, engine);
      for (std::size_t c = 0; c < slice.size(); ++c) m(r, c) = value.coefficient(slice[c]);
    }
    entry.rank = rank(m);
    entry.divisors = elementary_divisors(m);
    entry.rank_ok = entry.rank == entry.expected && slice.size() == entry.expected;
    entry.unimodular = entry.divisors.size() == slice.size() &&
                       std::all_of(entry.divisors.begin(), entry.divisors.end(),
                                   [](const mpz_class& x) { return x == 1; });
    report.passed = report.passed && entry.rank_ok && entry.unimodular;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace hilbcup
