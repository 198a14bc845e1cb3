#include "hilbcup/json_io.hpp"

#include "hilbcup/error.hpp"

namespace hilbcup::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

mpz_class parse_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (!j.is_string()) fail("expected an integer string, got " + j.dump());
  mpz_class v;
  if (v.set_str(j.get<std::string>(), 10) != 0) fail("bad integer '" + j.get<std::string>() + "'");
  return v;
}

mpq_class parse_rational(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (!j.is_string()) fail("expected a rational string, got " + j.dump());
  const auto s = j.get<std::string>();
  mpq_class v;
  if (v.set_str(s, 10) != 0) fail("bad rational '" + s + "'");
  if (v.get_den() == 0) fail("zero denominator in '" + s + "'");
  v.canonicalize();
  return v;
}

// [[index, exponent], ...] for a multiset keyed as a partition.
json exponent_pairs(const Partition& key) {
  json out = json::array();
  const auto mult = key.multiplicities();
  for (std::size_t i = 1; i < mult.size(); ++i) {
    if (mult[i]) out.push_back(json::array({i, mult[i]}));
  }
  return out;
}

Partition from_exponent_pairs(const json& j) {
  if (!j.is_array()) fail("expected [[index, exponent], ...]");
  std::vector<int> parts;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      fail("bad [index, exponent] pair " + pair.dump());
    }
    const int index = pair[0].get<int>();
    const int exponent = pair[1].get<int>();
    if (index < 1 || exponent < 0) fail("bad [index, exponent] pair " + pair.dump());
    parts.insert(parts.end(), exponent, index);
  }
  return Partition(std::move(parts));
}

template <class Coeff, class Parse>
BasicClassFunction<Coeff> class_function_impl(const json& j, Parse parse_value) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) fail("class function needs integer \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0) fail("class function weight must be non-negative");
  BasicClassFunction<Coeff> f(n);
  if (!j.contains("coeffs")) return f;
  if (!j["coeffs"].is_array()) fail("\"coeffs\" must be an array");
  for (const auto& entry : j["coeffs"]) {
    if (!entry.is_object() || !entry.contains("partition") || !entry.contains("value")) {
      fail("coefficient entry needs \"partition\" and \"value\"");
    }
    f.add(partition_from_json(entry["partition"]), parse_value(entry["value"]));
  }
  return f;
}

template <class Coeff>
json class_function_json(const BasicClassFunction<Coeff>& f) {
  json coeffs = json::array();
  for (const auto& [lambda, c] : f.coeffs()) coeffs.push_back({{"partition", to_json(lambda)}, {"value", c.get_str()}});
  return {{"n", f.n()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace

json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) fail("partition must be an array of parts");
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer() || p.get<long long>() < 1) fail("partition parts must be positive integers");
    parts.push_back(p.get<int>());
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) fail("partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

json to_json(const ClassFunction& f) { return class_function_json(f); }
json to_json(const RationalClassFunction& f) { return class_function_json(f); }

ClassFunction class_function_from_json(const json& j) { return class_function_impl<mpz_class>(j, parse_integer); }

RationalClassFunction rational_class_function_from_json(const json& j) {
  return class_function_impl<mpq_class>(j, parse_rational);
}

json to_json(const PPoly& q) {
  json out = json::array();
  for (const auto& [mono, c] : q.terms()) out.push_back({{"powers", exponent_pairs(mono)}, {"coeff", c.get_str()}});
  return out;
}

PPoly ppoly_from_json(const json& j) {
  if (!j.is_array()) fail("polynomial must be an array of terms");
  PPoly q;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("powers") || !term.contains("coeff")) {
      fail("polynomial term needs \"powers\" and \"coeff\"");
    }
    q.add(from_exponent_pairs(term["powers"]), parse_rational(term["coeff"]));
  }
  return q;
}

json to_json(const ChernPoly& r) {
  json out = json::array();
  for (const auto& [mono, c] : r.terms()) out.push_back({{"exponents", exponent_pairs(mono)}, {"coeff", c.get_str()}});
  return out;
}

ChernPoly chern_poly_from_json(const json& j) {
  if (!j.is_array()) fail("Chern polynomial must be an array of terms");
  ChernPoly r;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff")) {
      fail("Chern term needs \"exponents\" and \"coeff\"");
    }
    r.add(from_exponent_pairs(term["exponents"]), parse_integer(term["coeff"]));
  }
  return r;
}

json to_json(const CharacterTable& table) {
  json rows = json::array();
  json classes = json::array();
  for (const auto& p : table.partitions()) classes.push_back(to_json(p));
  json values = json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < table.size(); ++c) row.push_back(table.at(r, c).get_str());
    values.push_back(std::move(row));
  }
  return {{"n", table.n()}, {"rows", classes}, {"columns", classes}, {"values", std::move(values)}};
}

json to_json(const Presentation& p) {
  json generators = json::array();
  for (int i : p.generators) generators.push_back("c" + std::to_string(i));
  json relations = json::array();
  for (const auto& rel : p.relations) {
    relations.push_back({{"lambda", to_json(rel.lambda)}, {"poly", to_json(rel.poly)}, {"text", rel.poly.to_string()}});
  }
  return {{"n", p.n},
          {"max_degree", p.degree_bound},
          {"generators", std::move(generators)},
          {"relations", std::move(relations)},
          {"betti", p.betti},
          {"verified", p.verified},
          {"failures", p.failures}};
}

json to_json(const GradedRankReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json divisors = json::array();
    for (const auto& d : e.divisors) divisors.push_back(d.get_str());
    entries.push_back({{"degree", e.d},
                       {"rank", e.rank},
                       {"expected", e.expected},
                       {"elementary_divisors", std::move(divisors)},
                       {"rank_ok", e.rank_ok},
                       {"unimodular", e.unimodular}});
  }
  return {{"n", report.n}, {"degrees", std::move(entries)}, {"passed", report.passed}};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

}  // namespace hilbcup::json
