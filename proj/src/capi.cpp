#include "hilbcup/hilbcup.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "hilbcup/characters.hpp"
#include "hilbcup/class_function.hpp"
#include "hilbcup/error.hpp"
#include "hilbcup/hilbert.hpp"
#include "hilbcup/json_io.hpp"
#include "hilbcup/ppoly.hpp"
#include "hilbcup/verify.hpp"

struct hc_class_function {
  hilbcup::ClassFunction value;
};

struct hc_ppoly {
  hilbcup::PPoly value;
};

namespace {

using namespace hilbcup;

thread_local std::string last_error;

hc_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::WeightMismatch: return HC_ERR_WEIGHT_MISMATCH;
    case ErrorCode::Infeasible: return HC_ERR_INFEASIBLE;
    case ErrorCode::BoundExceeded: return HC_ERR_BOUND_EXCEEDED;
    case ErrorCode::NonIntegerResult: return HC_ERR_NON_INTEGER_RESULT;
    case ErrorCode::MixedWeight: return HC_ERR_MIXED_WEIGHT;
    case ErrorCode::OutOfRange: return HC_ERR_OUT_OF_RANGE;
    case ErrorCode::SingularBasis: return HC_ERR_SINGULAR_BASIS;
    case ErrorCode::NonIntegerCoefficient: return HC_ERR_NON_INTEGER_COEFFICIENT;
    case ErrorCode::UnknownSuite: return HC_ERR_UNKNOWN_SUITE;
    case ErrorCode::Parse: return HC_ERR_PARSE;
  }
  return HC_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
hc_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    body();
    return HC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return HC_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return HC_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Engine to_engine(hc_engine engine) {
  switch (engine) {
    case HC_ENGINE_BRUTEFORCE: return Engine::BruteForce;
    case HC_ENGINE_CHARACTER: return Engine::Character;
    case HC_ENGINE_AUTO: return Engine::Auto;
  }
  throw std::invalid_argument("unknown engine");
}

hc_status emit_class_function(hc_class_function** out, auto&& make) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new hc_class_function{make()};
  });
}

hc_status emit_ppoly(hc_ppoly** out, auto&& make) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new hc_ppoly{make()};
  });
}

}  // namespace

extern "C" {

const char* hc_version(void) { return "1.0.0"; }

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "OK";
    case HC_ERR_WEIGHT_MISMATCH: return "WEIGHT_MISMATCH";
    case HC_ERR_INFEASIBLE: return "INFEASIBLE";
    case HC_ERR_BOUND_EXCEEDED: return "BOUND_EXCEEDED";
    case HC_ERR_NON_INTEGER_RESULT: return "NON_INTEGER_RESULT";
    case HC_ERR_MIXED_WEIGHT: return "MIXED_WEIGHT";
    case HC_ERR_OUT_OF_RANGE: return "OUT_OF_RANGE";
    case HC_ERR_SINGULAR_BASIS: return "SINGULAR_BASIS";
    case HC_ERR_NON_INTEGER_COEFFICIENT: return "NON_INTEGER_COEFFICIENT";
    case HC_ERR_UNKNOWN_SUITE: return "UNKNOWN_SUITE";
    case HC_ERR_PARSE: return "PARSE_ERROR";
    case HC_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case HC_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* hc_last_error(void) { return last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

int hc_character_table_limit(void) { return character_table_limit(); }
void hc_set_character_table_limit(int limit) { set_character_table_limit(limit); }

hc_status hc_class_function_parse(const char* text, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(text != nullptr, "null json");
    return json::class_function_from_json(json::parse(text));
  });
}

hc_status hc_class_function_basis(const int* parts, size_t count, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(parts != nullptr || count == 0, "null parts");
    return ClassFunction::basis(Partition(std::vector<int>(parts, parts + count)));
  });
}

hc_status hc_class_function_to_json(const hc_class_function* f, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = copy_string(json::to_json(f->value).dump());
  });
}

hc_status hc_class_function_weight(const hc_class_function* f, int* n) {
  return guarded([&] {
    require(f && n, "null argument");
    *n = f->value.n();
  });
}

hc_status hc_class_function_equal(const hc_class_function* a, const hc_class_function* b, int* equal) {
  return guarded([&] {
    require(a && b && equal, "null argument");
    *equal = a->value == b->value ? 1 : 0;
  });
}

void hc_class_function_free(hc_class_function* f) { delete f; }

hc_status hc_convolve(const hc_class_function* f, const hc_class_function* g, hc_engine engine,
                      hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(f && g, "null argument");
    return convolve(f->value, g->value, to_engine(engine));
  });
}

hc_status hc_cup(const hc_class_function* f, const hc_class_function* g, hc_engine engine, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(f && g, "null argument");
    return cup(f->value, g->value, to_engine(engine));
  });
}

hc_status hc_restrict(const hc_class_function* f, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(f != nullptr, "null argument");
    return restrict(f->value);
  });
}

hc_status hc_induce(int m, const hc_class_function* f, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(f != nullptr, "null argument");
    return induce_r(m, f->value);
  });
}

hc_status hc_tau(int n, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(n >= 0, "n must be non-negative");
    return tau(n);
  });
}

hc_status hc_epsilon(int n, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(n >= 0, "n must be non-negative");
    return epsilon(n);
  });
}

hc_status hc_epsilon_component(int n, int i, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(n >= 0, "n must be non-negative");
    return epsilon_component(n, i);
  });
}

hc_status hc_ppoly_parse(const char* text, hc_ppoly** out) {
  return emit_ppoly(out, [&] {
    require(text != nullptr, "null json");
    return json::ppoly_from_json(json::parse(text));
  });
}

hc_status hc_ppoly_to_json(const hc_ppoly* q, char** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = copy_string(json::to_json(q->value).dump());
  });
}

hc_status hc_ppoly_equal(const hc_ppoly* a, const hc_ppoly* b, int* equal) {
  return guarded([&] {
    require(a && b && equal, "null argument");
    *equal = a->value == b->value ? 1 : 0;
  });
}

void hc_ppoly_free(hc_ppoly* q) { delete q; }

hc_status hc_phi(const hc_class_function* f, hc_ppoly** out) {
  return emit_ppoly(out, [&] {
    require(f != nullptr, "null argument");
    return phi(f->value);
  });
}

hc_status hc_phi_inverse(const hc_ppoly* q, hc_class_function** out) {
  return emit_class_function(out, [&] {
    require(q != nullptr, "null argument");
    return to_integral(phi_inverse(q->value));
  });
}

hc_status hc_goulden_delta(const hc_ppoly* q, hc_ppoly** out) {
  return emit_ppoly(out, [&] {
    require(q != nullptr, "null argument");
    return goulden_delta(q->value);
  });
}

hc_status hc_delta_prime(const hc_ppoly* q, hc_ppoly** out) {
  return emit_ppoly(out, [&] {
    require(q != nullptr, "null argument");
    return delta_prime(q->value);
  });
}

hc_status hc_d_component(int i, const hc_ppoly* q, hc_ppoly** out) {
  return emit_ppoly(out, [&] {
    require(q != nullptr, "null argument");
    return d_component(i, q->value);
  });
}

hc_status hc_d_operator(const hc_ppoly* q, hc_ppoly** out) {
  return emit_ppoly(out, [&] {
    require(q != nullptr, "null argument");
    return d_operator(q->value);
  });
}

hc_status hc_chern_operator(int k, const hc_ppoly* q, hc_ppoly** out) {
  return emit_ppoly(out, [&] {
    require(q != nullptr, "null argument");
    return chern_operator(k, q->value);
  });
}

hc_status hc_chartable_json(int n, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = copy_string(json::to_json(*character_table(n)).dump());
  });
}

hc_status hc_betti_json(int n, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = copy_string(nlohmann::json(betti(n)).dump());
  });
}

hc_status hc_presentation_json(int n, int max_degree, hc_engine engine, char** out, int* passed) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto p = presentation(n, max_degree > 0 ? std::optional<int>(max_degree) : std::nullopt, to_engine(engine));
    *out = copy_string(json::to_json(p).dump());
    if (passed) *passed = p.verified ? 1 : 0;
  });
}

hc_status hc_det_check_json(int max_d, hc_engine engine, char** out, int* passed) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(max_d >= 1, "max_d must be positive");
    nlohmann::json rows = nlohmann::json::array();
    bool all = true;
    for (int d = 1; d <= max_d; ++d) {
      const int n = 2 * d;
      const mpq_class det_a = abs(matrix_A(d, n, to_engine(engine)).exact_determinant());
      const mpq_class det_b = abs(matrix_B(d, n).exact_determinant());
      const mpq_class fa = det_A_formula(d);
      const mpq_class fb = det_B_formula(d);
      const bool ok = det_a == fa && det_b == fb && det_b != 0 && det_a / det_b == 1;
      all = all && ok;
      rows.push_back({{"d", d},
                      {"n", n},
                      {"abs_det_A", det_a.get_str()},
                      {"formula_A", fa.get_str()},
                      {"abs_det_B", det_b.get_str()},
                      {"formula_B", fb.get_str()},
                      {"ratio", det_b == 0 ? std::string("undefined") : mpq_class(det_a / det_b).get_str()},
                      {"passed", ok}});
    }
    *out = copy_string(nlohmann::json{{"rows", rows}, {"passed", all}}.dump());
    if (passed) *passed = all ? 1 : 0;
  });
}

hc_status hc_graded_rank_json(int n, int max_degree, hc_engine engine, char** out, int* passed) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(n >= 0, "n must be non-negative");
    const auto report = graded_rank_check(n, max_degree > 0 ? max_degree : std::max(n - 1, 0), to_engine(engine));
    *out = copy_string(json::to_json(report).dump());
    if (passed) *passed = report.passed ? 1 : 0;
  });
}

hc_status hc_verify_json(const char* suite, int max_n, int max_d, hc_engine engine, char** out, int* passed) {
  return guarded([&] {
    require(suite && out, "null argument");
    VerifyBounds bounds;
    bounds.max_n = max_n;
    if (max_d > 0) bounds.max_d = max_d;
    bounds.engine = to_engine(engine);
    std::vector<VerificationReport> reports;
    if (std::string(suite) == "all") {
      reports = verify_all(bounds);
    } else {
      reports.push_back(verify(suite, bounds));
    }
    nlohmann::json suites = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports) {
      suites.push_back(to_json(r));
      all = all && r.passed;
    }
    *out = copy_string(nlohmann::json{{"suites", suites}, {"passed", all}}.dump());
    if (passed) *passed = all ? 1 : 0;
  });
}

}  // extern "C"
