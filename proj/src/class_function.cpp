#include "hilbcup/class_function.hpp"

#include <memory>
#include <mutex>
#include <vector>

#include "hilbcup/characters.hpp"
#include "hilbcup/error.hpp"
#include "hilbcup/group_ring.hpp"

namespace hilbcup {

Engine resolve_engine(Engine engine, int n) noexcept {
  if (engine != Engine::Auto) return engine;
  return n <= 5 ? Engine::BruteForce : Engine::Character;
}

// ---------------------------------------------------------------------------
// BasicClassFunction

template <class Coeff>
void BasicClassFunction<Coeff>::add(const Partition& lambda, const Coeff& c) {
  if (lambda.weight() != n_) {
    throw Error(ErrorCode::WeightMismatch,
                lambda.to_string() + " in a class function on S_" + std::to_string(n_));
  }
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

template <class Coeff>
BasicClassFunction<Coeff> BasicClassFunction<Coeff>::degree_component(int d) const {
  BasicClassFunction out(n_);
  for (const auto& [lambda, c] : coeffs_) {
    if (degree(lambda) == d) out.coeffs_.emplace(lambda, c);
  }
  return out;
}

template <class Coeff>
std::optional<int> BasicClassFunction<Coeff>::homogeneous_degree() const {
  if (coeffs_.empty()) return 0;
  const int d = degree(coeffs_.begin()->first);
  for (const auto& [lambda, c] : coeffs_) {
    if (degree(lambda) != d) return std::nullopt;
  }
  return d;
}

template <class Coeff>
void BasicClassFunction<Coeff>::check_weight(const BasicClassFunction& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::WeightMismatch,
                "class functions on S_" + std::to_string(n_) + " and S_" + std::to_string(other.n_));
  }
}

template <class Coeff>
BasicClassFunction<Coeff>& BasicClassFunction<Coeff>::operator+=(const BasicClassFunction& other) {
  check_weight(other);
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
  return *this;
}

template <class Coeff>
BasicClassFunction<Coeff>& BasicClassFunction<Coeff>::operator-=(const BasicClassFunction& other) {
  check_weight(other);
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, Coeff(-c));
  return *this;
}

template <class Coeff>
BasicClassFunction<Coeff>& BasicClassFunction<Coeff>::operator*=(const Coeff& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lambda, value] : coeffs_) value *= c;
  return *this;
}

template <class Coeff>
std::string BasicClassFunction<Coeff>::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [lambda, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*chi" + lambda.to_string();
  }
  return s;
}

template class BasicClassFunction<mpz_class>;
template class BasicClassFunction<mpq_class>;

RationalClassFunction to_rational(const ClassFunction& f) {
  RationalClassFunction out(f.n());
  for (const auto& [lambda, c] : f.coeffs()) out.add(lambda, mpq_class(c));
  return out;
}

ClassFunction to_integral(const RationalClassFunction& f) {
  ClassFunction out(f.n());
  for (const auto& [lambda, c] : f.coeffs()) {
    if (c.get_den() != 1) {
      throw Error(ErrorCode::NonIntegerResult,
                  "coefficient " + c.get_str() + " at " + lambda.to_string());
    }
    out.add(lambda, c.get_num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force engine

namespace {

struct BruteForceData {
  std::vector<Partition> classes;
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<Permutation>> members;  // by class index

  explicit BruteForceData(int n) : classes(enumerate(n)), members(classes.size()) {
    for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);
    for (auto& pi : all_permutations(n)) members[index.at(pi.cycle_type())].push_back(std::move(pi));
  }
};

std::shared_ptr<const BruteForceData> bruteforce_data(int n) {
  if (n > bruteforce_limit()) {
    throw Error(ErrorCode::BoundExceeded, "brute-force engine supports n <= " +
                                              std::to_string(bruteforce_limit()));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const BruteForceData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const BruteForceData>(n);
  return slot;
}

StructureConstants bruteforce_structure_constants(const Partition& lambda, const Partition& mu) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, StructureConstants> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({lambda, mu}); it != cache.end()) return it->second;
  }
  const auto data = bruteforce_data(lambda.weight());
  const auto& as = data->members[data->index.at(lambda)];
  StructureConstants out;
  for (const auto& nu : data->classes) {
    const Permutation sigma = Permutation::of_type(nu);
    long count = 0;
    for (const auto& a : as) {
      // ab = sigma  =>  b = a^-1 sigma
      if (compose(a.inverse(), sigma).cycle_type() == mu) ++count;
    }
    if (count) out.emplace(nu, count);
  }
  std::lock_guard lock(mutex);
  cache.emplace(std::pair{lambda, mu}, out);
  return out;
}

// ---------------------------------------------------------------------------
// Character engine
//
// Central characters omega_kappa(chi_lambda) = |C_lambda| chi^kappa(lambda) /
// dim kappa are integers, and a class function is recovered from them by
// z_nu = sum_kappa dim kappa chi^kappa(nu) omega_kappa(z) / n!. Convolution is
// pointwise in the omega coordinates; summing the structure-constant formula
// over the inputs gives exactly this form.

struct SpectralData {
  std::shared_ptr<const CharacterTable> table;
  std::vector<mpz_class> omega;    // [kappa * k + lambda]
  std::vector<mpz_class> inverse;  // [nu * k + kappa] = dim kappa * chi^kappa(nu)
  mpz_class n_factorial;

  explicit SpectralData(int n) : table(character_table(n)), n_factorial(factorial(n)) {
    const std::size_t k = table->size();
    omega.resize(k * k);
    inverse.resize(k * k);
    const auto& parts = table->partitions();
    for (std::size_t kappa = 0; kappa < k; ++kappa) {
      const mpz_class& dim = table->dimension(kappa);
      for (std::size_t lambda = 0; lambda < k; ++lambda) {
        mpz_class w = class_size(parts[lambda]) * table->at(kappa, lambda);
        mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), dim.get_mpz_t());
        omega[kappa * k + lambda] = std::move(w);
        inverse[lambda * k + kappa] = dim * table->at(kappa, lambda);
      }
    }
  }

  std::size_t size() const { return table->size(); }
};

std::shared_ptr<const SpectralData> spectral_data(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SpectralData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto data = std::make_shared<const SpectralData>(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(data)).first->second;
}

template <class Coeff>
std::vector<Coeff> to_spectral(const SpectralData& s, const BasicClassFunction<Coeff>& f) {
  const std::size_t k = s.size();
  std::vector<Coeff> out(k, Coeff(0));
  for (const auto& [lambda, c] : f.coeffs()) {
    const std::size_t col = s.table->index_of(lambda);
    for (std::size_t kappa = 0; kappa < k; ++kappa) out[kappa] += c * s.omega[kappa * k + col];
  }
  return out;
}

mpz_class exact_divide(const mpz_class& num, const mpz_class& den, const Partition& at) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorCode::NonIntegerResult, "character engine produced a fraction at " + at.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

mpq_class exact_divide(const mpq_class& num, const mpz_class& den, const Partition&) {
  return num / mpq_class(den);
}

// Reads back the classes whose degree passes `keep`.
template <class Coeff, class Keep>
BasicClassFunction<Coeff> from_spectral(const SpectralData& s, const std::vector<Coeff>& h, Keep keep) {
  const std::size_t k = s.size();
  const auto& parts = s.table->partitions();
  BasicClassFunction<Coeff> out(s.table->n());
  for (std::size_t nu = 0; nu < k; ++nu) {
    if (!keep(parts[nu])) continue;
    Coeff acc(0);
    for (std::size_t kappa = 0; kappa < k; ++kappa) acc += s.inverse[nu * k + kappa] * h[kappa];
    if (acc != 0) out.add(parts[nu], exact_divide(acc, s.n_factorial, parts[nu]));
  }
  return out;
}

StructureConstants character_structure_constants(const Partition& lambda, const Partition& mu) {
  const auto table = character_table(lambda.weight());
  const std::size_t k = table->size();
  const std::size_t il = table->index_of(lambda);
  const std::size_t im = table->index_of(mu);
  const mpq_class prefactor(class_size(lambda) * class_size(mu), factorial(lambda.weight()));
  StructureConstants out;
  for (std::size_t nu = 0; nu < k; ++nu) {
    mpq_class sum = 0;
    for (std::size_t kappa = 0; kappa < k; ++kappa) {
      sum += mpq_class(table->at(kappa, il) * table->at(kappa, im) * table->at(kappa, nu),
                       table->dimension(kappa));
    }
    sum *= prefactor;
    sum.canonicalize();
    if (sum.get_den() != 1) {
      throw Error(ErrorCode::NonIntegerResult, "a_{" + lambda.to_string() + mu.to_string() + "}^" +
                                                   table->partitions()[nu].to_string() + " = " +
                                                   sum.get_str());
    }
    if (sum != 0) out.emplace(table->partitions()[nu], sum.get_num());
  }
  return out;
}

template <class Coeff>
void check_same_weight(const BasicClassFunction<Coeff>& f, const BasicClassFunction<Coeff>& g) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::WeightMismatch,
                "class functions on S_" + std::to_string(f.n()) + " and S_" + std::to_string(g.n()));
  }
}

// Bilinear extension of brute-force structure constants, restricted to output
// degree deg(lambda) + deg(mu) when `graded`.
template <class Coeff>
BasicClassFunction<Coeff> bruteforce_product(const BasicClassFunction<Coeff>& f,
                                             const BasicClassFunction<Coeff>& g, bool graded) {
  BasicClassFunction<Coeff> out(f.n());
  for (const auto& [lambda, a] : f.coeffs()) {
    for (const auto& [mu, b] : g.coeffs()) {
      const int target = degree(lambda) + degree(mu);
      for (const auto& [nu, c] : bruteforce_structure_constants(lambda, mu)) {
        if (graded && degree(nu) != target) continue;
        out.add(nu, Coeff(a * b * c));
      }
    }
  }
  return out;
}

}  // namespace

StructureConstants structure_constants(const Partition& lambda, const Partition& mu, Engine engine) {
  if (lambda.weight() != mu.weight()) {
    throw Error(ErrorCode::WeightMismatch,
                "structure_constants(" + lambda.to_string() + ", " + mu.to_string() + ")");
  }
  if (resolve_engine(engine, lambda.weight()) == Engine::BruteForce) {
    return bruteforce_structure_constants(lambda, mu);
  }
  return character_structure_constants(lambda, mu);
}

template <class Coeff>
BasicClassFunction<Coeff> convolve(const BasicClassFunction<Coeff>& f, const BasicClassFunction<Coeff>& g,
                                   Engine engine) {
  check_same_weight(f, g);
  if (f.is_zero() || g.is_zero()) return BasicClassFunction<Coeff>(f.n());
  if (resolve_engine(engine, f.n()) == Engine::BruteForce) return bruteforce_product(f, g, false);

  const auto s = spectral_data(f.n());
  auto hf = to_spectral(*s, f);
  const auto hg = to_spectral(*s, g);
  for (std::size_t i = 0; i < hf.size(); ++i) hf[i] *= hg[i];
  return from_spectral(*s, hf, [](const Partition&) { return true; });
}

template <class Coeff>
BasicClassFunction<Coeff> cup(const BasicClassFunction<Coeff>& f, const BasicClassFunction<Coeff>& g,
                              Engine engine) {
  check_same_weight(f, g);
  const int n = f.n();
  if (f.is_zero() || g.is_zero()) return BasicClassFunction<Coeff>(n);
  if (resolve_engine(engine, n) == Engine::BruteForce) return bruteforce_product(f, g, true);

  const auto s = spectral_data(n);
  const int top = std::max(n - 1, 0);
  std::vector<std::vector<Coeff>> fs(top + 1), gs(top + 1);
  for (int d = 0; d <= top; ++d) {
    if (auto fd = f.degree_component(d); !fd.is_zero()) fs[d] = to_spectral(*s, fd);
    if (auto gd = g.degree_component(d); !gd.is_zero()) gs[d] = to_spectral(*s, gd);
  }
  BasicClassFunction<Coeff> out(n);
  for (int d = 0; d <= top; ++d) {
    std::vector<Coeff> acc;
    for (int i = 0; i <= d; ++i) {
      if (fs[i].empty() || gs[d - i].empty()) continue;
      if (acc.empty()) acc.assign(s->size(), Coeff(0));
      for (std::size_t kappa = 0; kappa < acc.size(); ++kappa) acc[kappa] += fs[i][kappa] * gs[d - i][kappa];
    }
    if (acc.empty()) continue;
    out += from_spectral(*s, acc, [d](const Partition& nu) { return degree(nu) == d; });
  }
  return out;
}

template ClassFunction convolve(const ClassFunction&, const ClassFunction&, Engine);
template RationalClassFunction convolve(const RationalClassFunction&, const RationalClassFunction&, Engine);
template ClassFunction cup(const ClassFunction&, const ClassFunction&, Engine);
template RationalClassFunction cup(const RationalClassFunction&, const RationalClassFunction&, Engine);

// ---------------------------------------------------------------------------
// Distinguished elements, restriction, induction

ClassFunction unit(int n) { return ClassFunction::basis(Partition::ones(n)); }

ClassFunction tau(int n) {
  if (n < 2) return ClassFunction(std::max(n, 0));
  std::vector<int> parts(n - 1, 1);
  parts[0] = 2;
  return ClassFunction::basis(Partition(std::move(parts)));
}

ClassFunction epsilon(int n) {
  ClassFunction out(n);
  for (const auto& lambda : enumerate(n)) out.add(lambda, degree(lambda) % 2 ? -1 : 1);
  return out;
}

ClassFunction epsilon_component(int n, int i) {
  if (i < 0 || i > std::max(n - 1, 0)) {
    throw Error(ErrorCode::OutOfRange,
                "epsilon_component(" + std::to_string(n) + ", " + std::to_string(i) + ")");
  }
  ClassFunction out(n);
  for (const auto& lambda : enumerate(n)) {
    if (degree(lambda) == i) out.add(lambda, i % 2 ? -1 : 1);
  }
  return out;
}

template <class Coeff>
BasicClassFunction<Coeff> restrict(const BasicClassFunction<Coeff>& f) {
  if (f.n() < 1) throw Error(ErrorCode::OutOfRange, "restrict needs n >= 1");
  BasicClassFunction<Coeff> out(f.n() - 1);
  for (const auto& [lambda, c] : f.coeffs()) {
    if (auto mu = lambda.without_part(1)) out.add(*mu, c);
  }
  return out;
}

template <class Coeff>
BasicClassFunction<Coeff> induce_r(int m, const BasicClassFunction<Coeff>& f) {
  if (m < 1) throw Error(ErrorCode::OutOfRange, "induce_r needs m >= 1");
  BasicClassFunction<Coeff> out(f.n() + m);
  for (const auto& [mu, c] : f.coeffs()) out.add(mu.with_part(m), Coeff(c * m * (mu.multiplicity(m) + 1)));
  return out;
}

template ClassFunction restrict(const ClassFunction&);
template RationalClassFunction restrict(const RationalClassFunction&);
template ClassFunction induce_r(int, const ClassFunction&);
template RationalClassFunction induce_r(int, const RationalClassFunction&);

EpsCommutatorWitness verify_eps_commutator(const RationalClassFunction& f, Engine engine) {
  const int n = f.n();
  const auto eps_n = to_rational(epsilon(n));
  const auto eps_n1 = to_rational(epsilon(n + 1));
  const auto tau_n = to_rational(tau(n));
  const auto tau_n1 = to_rational(tau(n + 1));

  const auto eps_f = cup(eps_n, f, engine);
  const auto r1_eps_f = induce_r(1, eps_f);
  auto lhs = cup(eps_n1, induce_r(1, f), engine) - r1_eps_f;
  auto rhs = induce_r(1, cup(tau_n, eps_f, engine)) - cup(tau_n1, r1_eps_f, engine);
  const bool holds = lhs == rhs;
  return {holds, std::move(lhs), std::move(rhs)};
}

}  // namespace hilbcup
