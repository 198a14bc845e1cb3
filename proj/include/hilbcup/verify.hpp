#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbcup/class_function.hpp"

namespace hilbcup {

struct VerifyBounds {
  int max_n = 6;
  // Degree bound for the det and relations suites; 5 when unset.
  std::optional<int> max_d;
  Engine engine = Engine::Auto;
};

struct CaseResult {
  std::string name;
  bool passed = true;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, int> parameters;
  std::vector<CaseResult> cases;
  bool passed = true;
  // Inputs and both sides of the first failing case.
  std::optional<std::string> counterexample;
  double seconds = 0;
};

const std::vector<std::string>& suite_names();

// Throws Error(UnknownSuite) for names outside suite_names().
VerificationReport verify(const std::string& suite, const VerifyBounds& bounds);
// Every suite in suite_names() order.
std::vector<VerificationReport> verify_all(const VerifyBounds& bounds);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace hilbcup
