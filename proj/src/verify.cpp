#include "hilbcup/verify.hpp"

#include <chrono>
#include <functional>

#include "hilbcup/characters.hpp"
#include "hilbcup/error.hpp"
#include "hilbcup/group_ring.hpp"
#include "hilbcup/hilbert.hpp"
#include "hilbcup/linalg.hpp"
#include "hilbcup/ppoly.hpp"

namespace hilbcup {

namespace {

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  // `detail` is only evaluated for the first failure.
  void check(std::string name, bool ok, const std::function<std::string()>& detail) {
    report_.cases.push_back({name, ok});
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = name + ": " + detail();
    }
    report_.passed = report_.passed && ok;
  }

 private:
  VerificationReport& report_;
};

std::string n_lambda(int n, const Partition& lambda) {
  return "n=" + std::to_string(n) + " lambda=" + lambda.to_string();
}

std::string sides(const std::string& lhs, const std::string& rhs) { return "lhs = " + lhs + "; rhs = " + rhs; }

std::string format(const StructureConstants& sc) {
  std::string s = "{";
  for (const auto& [nu, c] : sc) s += nu.to_string() + ": " + c.get_str() + ", ";
  return s + "}";
}

int degree_bound(const VerifyBounds& b) { return b.max_d.value_or(5); }

void suite_goulden(const VerifyBounds& b, Recorder& r, bool graded) {
  for (int n = 1; n <= b.max_n; ++n) {
    const auto t = tau(n);
    for (const auto& lambda : enumerate(n)) {
      const auto chi = ClassFunction::basis(lambda);
      const PPoly lhs = graded ? phi(cup(t, chi, b.engine)) : phi(convolve(t, chi, b.engine));
      const PPoly rhs = graded ? delta_prime(phi(chi)) : goulden_delta(phi(chi));
      r.check(n_lambda(n, lambda), lhs == rhs, [&] { return sides(lhs.to_string(), rhs.to_string()); });
    }
  }
}

void suite_eps_commutator(const VerifyBounds& b, Recorder& r) {
  for (int n = 0; n <= b.max_n; ++n) {
    for (const auto& lambda : enumerate(n)) {
      const auto w = verify_eps_commutator(to_rational(ClassFunction::basis(lambda)), b.engine);
      r.check(n_lambda(n, lambda), w.holds, [&] { return sides(w.lhs.to_string(), w.rhs.to_string()); });
    }
  }
}

void suite_eps_series(const VerifyBounds& b, Recorder& r) {
  for (int n = 0; n <= b.max_n; ++n) {
    const PPoly lhs = phi(epsilon(n));
    const PPoly rhs = epsilon_series_coefficient(n);
    r.check("n=" + std::to_string(n), lhs == rhs, [&] { return sides(lhs.to_string(), rhs.to_string()); });
  }
}

void suite_d_consistency(const VerifyBounds& b, Recorder& r) {
  for (int n = 0; n <= b.max_n; ++n) {
    for (const auto& mono : enumerate(n)) {
      const PPoly q = PPoly::monomial(mono);
      const PPoly lhs = d_operator(q);
      PPoly rhs;
      for (int i = 0; i <= n; ++i) rhs += d_component(i, q);
      r.check("D = sum D_i on p" + mono.to_string(), lhs == rhs,
              [&] { return sides(lhs.to_string(), rhs.to_string()); });
      const PPoly d1 = d_component(1, q);
      const PPoly minus_delta = mpq_class(-1) * delta_prime(q);
      r.check("D_1 = -Delta' on p" + mono.to_string(), d1 == minus_delta,
              [&] { return sides(d1.to_string(), minus_delta.to_string()); });
    }
  }
}

void suite_main_shadow(const VerifyBounds& b, Recorder& r) {
  for (int n = 2; n <= b.max_n; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const auto eps_k = epsilon_component(n, k);
      for (const auto& lambda : enumerate(n)) {
        const auto chi = ClassFunction::basis(lambda);
        const PPoly lhs = phi(cup(eps_k, chi, b.engine));
        const PPoly rhs = chern_operator(k, phi(chi));
        r.check(n_lambda(n, lambda) + " k=" + std::to_string(k), lhs == rhs,
                [&] { return sides(lhs.to_string(), rhs.to_string()); });
      }
    }
  }
}

void suite_engines(const VerifyBounds& b, Recorder& r) {
  const int top = std::min(b.max_n, bruteforce_limit());
  for (int n = 1; n <= top; ++n) {
    const auto parts = enumerate(n);
    for (const auto& lambda : parts) {
      for (const auto& mu : parts) {
        const auto brute = structure_constants(lambda, mu, Engine::BruteForce);
        const auto chars = structure_constants(lambda, mu, Engine::Character);
        r.check("n=" + std::to_string(n) + " " + lambda.to_string() + "x" + mu.to_string(), brute == chars,
                [&] { return sides(format(brute), format(chars)); });
      }
    }
    // Whole-function products through both engines.
    const auto e = epsilon(n);
    const auto t = tau(n);
    for (int graded = 0; graded <= 1; ++graded) {
      const auto lhs = graded ? cup(e, t, Engine::BruteForce) : convolve(e, t, Engine::BruteForce);
      const auto rhs = graded ? cup(e, t, Engine::Character) : convolve(e, t, Engine::Character);
      r.check("n=" + std::to_string(n) + (graded ? " eps cup tau" : " eps * tau"), lhs == rhs,
              [&] { return sides(lhs.to_string(), rhs.to_string()); });
    }
  }
}

bool lower_triangular(const BasisMatrix& m, const std::vector<Partition>& order) {
  // entries(mu, lambda) == 0 whenever mu precedes lambda in `order`.
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (m.at(order[i], order[j]) != 0) return false;
    }
  }
  return true;
}

void suite_det(const VerifyBounds& b, Recorder& r) {
  for (int d = 1; d <= degree_bound(b); ++d) {
    const int n = 2 * d;
    const auto a = matrix_A(d, n, b.engine);
    const auto bm = matrix_B(d, n);
    const mpq_class det_a = abs(a.exact_determinant());
    const mpq_class det_b = abs(bm.exact_determinant());
    const std::string tag = "d=" + std::to_string(d);
    r.check(tag + " |det A|", det_a == det_A_formula(d),
            [&] { return sides(det_a.get_str(), det_A_formula(d).get_str()); });
    r.check(tag + " |det B|", det_b == det_B_formula(d),
            [&] { return sides(det_b.get_str(), det_B_formula(d).get_str()); });
    r.check(tag + " |det A / det B| = 1", det_b != 0 && det_a / det_b == 1,
            [&] { return sides(det_a.get_str(), det_b.get_str()); });

    // A: lower triangular in ascending "<" order.
    const auto ascending = enumerate(d);
    bool diag_a = true;
    for (const auto& lambda : ascending) diag_a = diag_a && a.at(lambda, lambda) == diagonal_A(lambda);
    r.check(tag + " A triangular", lower_triangular(a, ascending), [] { return std::string("non-zero above diagonal"); });
    r.check(tag + " A diagonal", diag_a, [] { return std::string("diagonal mismatch"); });

    // B: lower triangular in the order mu > lambda iff mu' > lambda'.
    auto by_associate = ascending;
    std::sort(by_associate.begin(), by_associate.end(), [n](const Partition& x, const Partition& y) {
      return lex_compare(associate(x, n), associate(y, n)) < 0;
    });
    bool diag_b = true;
    for (const auto& lambda : ascending) diag_b = diag_b && bm.at(lambda, lambda) == diagonal_B(lambda);
    r.check(tag + " B triangular", lower_triangular(bm, by_associate), [] { return std::string("non-zero above diagonal"); });
    r.check(tag + " B diagonal", diag_b, [] { return std::string("diagonal mismatch"); });
  }
}

void suite_relations(const VerifyBounds& b, Recorder& r) {
  struct Spot {
    Partition lambda;
    ChernPoly expected;
  };
  std::vector<Spot> spots(3);
  spots[0].lambda = Partition{1};
  spots[0].expected.add(Partition{1}, -1);
  spots[1].lambda = Partition{1, 1};
  spots[1].expected.add(Partition{2}, 3);
  spots[1].expected.add(Partition{1, 1}, -1);
  spots[2].lambda = Partition{2};
  spots[2].expected.add(Partition{1, 1}, 1);
  spots[2].expected.add(Partition{2}, -2);
  for (const auto& s : spots) {
    const auto got = relation_poly(s.lambda, std::nullopt, b.engine);
    r.check("r_" + s.lambda.to_string(), got == s.expected,
            [&] { return sides(got.to_string(), s.expected.to_string()); });
  }

  const int dmax = degree_bound(b);
  std::map<Partition, ChernPoly> polys;
  for (int d = 1; d <= dmax; ++d) {
    for (const auto& lambda : enumerate(d)) {
      bool integral = true;
      std::string what;
      try {
        polys.emplace(lambda, relation_poly(lambda, std::nullopt, b.engine));
      } catch (const Error& e) {
        integral = false;
        what = e.what();
      }
      r.check("r_" + lambda.to_string() + " integral", integral, [&] { return what; });
    }
  }

  // Stability in n; capped by the character table size.
  for (const auto& [lambda, poly] : polys) {
    const int d = lambda.weight();
    for (int n = 2 * d + 1; n <= std::min(2 * d + 3, character_table_limit()); ++n) {
      const auto again = relation_poly(lambda, n, b.engine);
      r.check("r_" + lambda.to_string() + " stable at n=" + std::to_string(n), again == poly,
              [&] { return sides(again.to_string(), poly.to_string()); });
    }
  }

  for (int n = 1; n <= b.max_n; ++n) {
    for (const auto& [lambda, poly] : polys) {
      const auto value = evaluate(poly, n, b.engine);
      const bool relation = associate_threshold(lambda) > n;
      const auto expected = relation ? ClassFunction(n) : ClassFunction::basis(associate(lambda, n));
      r.check(n_lambda(n, lambda) + (relation ? " vanishes" : " gives chi_lambda'"), value == expected,
              [&] { return sides(value.to_string(), expected.to_string()); });
    }
  }
}

void suite_spanning(const VerifyBounds& b, Recorder& r) {
  for (int n = 1; n <= b.max_n; ++n) {
    const auto classes = enumerate(n);
    const auto t = to_rational(tau(n));
    std::vector<RationalClassFunction> spanning;
    for (const auto& lambda : classes) spanning.push_back(cup(t, to_rational(ClassFunction::basis(lambda)), b.engine));
    for (const auto& mu : enumerate(n - 1)) spanning.push_back(induce_r(1, to_rational(ClassFunction::basis(mu))));
    RationalMatrix m(spanning.size(), classes.size());
    for (std::size_t i = 0; i < spanning.size(); ++i) {
      for (std::size_t c = 0; c < classes.size(); ++c) m(i, c) = spanning[i].coefficient(classes[c]);
    }
    const auto rk = rank(m);
    r.check("n=" + std::to_string(n) + " tau u C + r1(C) full rank", rk == classes.size(),
            [&] { return sides(std::to_string(rk), std::to_string(classes.size())); });

    const auto report = graded_rank_check(n, n - 1, b.engine);
    for (const auto& e : report.entries) {
      const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(e.d);
      r.check(tag + " graded rank", e.rank_ok,
              [&] { return sides(std::to_string(e.rank), std::to_string(e.expected)); });
      r.check(tag + " eps generates over Z", e.unimodular, [&] {
        std::string s;
        for (const auto& x : e.divisors) s += x.get_str() + " ";
        return "elementary divisors " + s;
      });
    }
  }
}

void suite_restriction(const VerifyBounds& b, Recorder& r) {
  for (int n = 1; n <= b.max_n; ++n) {
    const auto parts = enumerate(n);
    for (const auto& lambda : parts) {
      for (const auto& mu : parts) {
        const auto f = ClassFunction::basis(lambda);
        const auto g = ClassFunction::basis(mu);
        const auto lhs = restrict(cup(f, g, b.engine));
        const auto rhs = cup(restrict(f), restrict(g), b.engine);
        r.check("n=" + std::to_string(n) + " " + lambda.to_string() + "u" + mu.to_string(), lhs == rhs,
                [&] { return sides(lhs.to_string(), rhs.to_string()); });
      }
    }
    const auto re = restrict(epsilon(n));
    r.check("rho(eps_" + std::to_string(n) + ")", re == epsilon(n - 1),
            [&] { return sides(re.to_string(), epsilon(n - 1).to_string()); });
  }
  if (b.max_n >= 2) {
    const auto chi2 = ClassFunction::basis(Partition{2});
    const auto lhs = restrict(convolve(chi2, chi2, b.engine));
    const auto rhs = convolve(restrict(chi2), restrict(chi2), b.engine);
    r.check("convolution witness n=2", lhs == ClassFunction::basis(Partition{1}) && rhs.is_zero() && lhs != rhs,
            [&] { return sides(lhs.to_string(), rhs.to_string()); });
  }
}

void suite_induction_phi(const VerifyBounds& b, Recorder& r) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 0; n <= b.max_n; ++n) {
      for (const auto& lambda : enumerate(n)) {
        const auto chi = ClassFunction::basis(lambda);
        const PPoly lhs = phi(induce_r(m, chi));
        const PPoly rhs = multiply_by_p(m, phi(chi));
        r.check("m=" + std::to_string(m) + " " + n_lambda(n, lambda), lhs == rhs,
                [&] { return sides(lhs.to_string(), rhs.to_string()); });
      }
    }
  }
  // r_1 closed form against the group-ring symmetrization.
  for (int n = 0; n <= std::min(b.max_n, 5); ++n) {
    for (const auto& lambda : enumerate(n)) {
      const auto chi = ClassFunction::basis(lambda);
      const auto lhs = induce_r(1, chi);
      const auto rhs = induce_r1_bruteforce(chi);
      r.check("iota " + n_lambda(n, lambda), lhs == rhs, [&] { return sides(lhs.to_string(), rhs.to_string()); });
    }
  }
}

void suite_commutators(const VerifyBounds& b, Recorder& r) {
  for (const auto& check : commutator_checks(b.max_n)) {
    r.check(check.name, check.passed, [&] { return check.detail; });
  }
}

using SuiteFn = std::function<void(const VerifyBounds&, Recorder&)>;

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table{
      {"goulden", [](const VerifyBounds& b, Recorder& r) { suite_goulden(b, r, false); }},
      {"cup-goulden", [](const VerifyBounds& b, Recorder& r) { suite_goulden(b, r, true); }},
      {"eps-commutator", suite_eps_commutator},
      {"eps-series", suite_eps_series},
      {"d-consistency", suite_d_consistency},
      {"main-shadow", suite_main_shadow},
      {"engines", suite_engines},
      {"det", suite_det},
      {"relations", suite_relations},
      {"spanning", suite_spanning},
      {"restriction", suite_restriction},
      {"induction-phi", suite_induction_phi},
      {"commutators", suite_commutators},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"goulden", "cup-goulden", "eps-commutator", "eps-series", "d-consistency",
                                              "main-shadow", "engines", "det", "relations", "spanning",
                                              "restriction", "induction-phi", "commutators"};
  return names;
}

VerificationReport verify(const std::string& suite, const VerifyBounds& bounds) {
  const auto& table = suites();
  auto it = table.find(suite);
  if (it == table.end()) throw Error(ErrorCode::UnknownSuite, "no suite named '" + suite + "'");
  VerificationReport report;
  report.suite = suite;
  report.parameters["max_n"] = bounds.max_n;
  if (suite == "det" || suite == "relations") report.parameters["max_d"] = degree_bound(bounds);
  Recorder recorder(report);
  const auto start = std::chrono::steady_clock::now();
  it->second(bounds, recorder);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_all(const VerifyBounds& bounds) {
  std::vector<VerificationReport> out;
  for (const auto& name : suite_names()) out.push_back(verify(name, bounds));
  return out;
}

nlohmann::json to_json(const VerificationReport& report) {
  std::size_t failed = 0;
  for (const auto& c : report.cases) failed += c.passed ? 0 : 1;
  nlohmann::json j{{"suite", report.suite},
                   {"parameters", report.parameters},
                   {"cases", report.cases.size()},
                   {"failed", failed},
                   {"passed", report.passed}};
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : report.cases) {
    if (!c.passed) failures.push_back(c.name);
  }
  j["failing_cases"] = std::move(failures);
  return j;
}

}  // namespace hilbcup
