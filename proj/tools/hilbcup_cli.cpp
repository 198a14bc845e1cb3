// Command-line front end. Everything goes through the C interface in
// hilbcup.h; nlohmann::json is only used to render text output.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbcup/hilbcup.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

struct ClassFunctionDeleter {
  void operator()(hc_class_function* f) const { hc_class_function_free(f); }
};
struct PPolyDeleter {
  void operator()(hc_ppoly* q) const { hc_ppoly_free(q); }
};
using ClassFunctionHandle = std::unique_ptr<hc_class_function, ClassFunctionDeleter>;
using PPolyHandle = std::unique_ptr<hc_ppoly, PPolyDeleter>;

void check(hc_status status, const std::string& context) {
  if (status != HC_OK) throw CliError{context + ": " + hc_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  hc_string_free(s);
  return out;
}

// Literal JSON, or @path to read it from a file.
std::string read_argument(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw CliError{"cannot read " + value.substr(1)};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ClassFunctionHandle parse_class_function(const std::string& flag, const std::string& value,
                                         std::optional<int> expected_n) {
  hc_class_function* raw = nullptr;
  check(hc_class_function_parse(read_argument(value).c_str(), &raw), flag);
  ClassFunctionHandle f(raw);
  if (expected_n) {
    int n = 0;
    check(hc_class_function_weight(f.get(), &n), flag);
    if (n != *expected_n) {
      throw CliError{flag + ": WEIGHT_MISMATCH: class function on S_" + std::to_string(n) + " but --n " +
                     std::to_string(*expected_n)};
    }
  }
  return f;
}

hc_engine parse_engine(const std::string& name) {
  if (name == "bruteforce") return HC_ENGINE_BRUTEFORCE;
  if (name == "character") return HC_ENGINE_CHARACTER;
  return HC_ENGINE_AUTO;
}

std::string partition_text(const json& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i].get<int>());
  return s + ")";
}

std::string powers_text(const json& powers) {
  if (powers.empty()) return "1";
  std::string s;
  for (const auto& pair : powers) {
    if (!s.empty()) s += "*";
    s += "p" + std::to_string(pair[0].get<int>());
    if (pair[1].get<int>() > 1) s += "^" + std::to_string(pair[1].get<int>());
  }
  return s;
}

std::string render_class_function(const json& j) {
  std::ostringstream os;
  os << "class function on S_" << j["n"].get<int>() << "\n";
  if (j["coeffs"].empty()) os << "  0\n";
  for (const auto& term : j["coeffs"]) {
    os << "  " << std::setw(24) << std::left << partition_text(term["partition"]) << std::right << std::setw(16)
       << term["value"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string render_ppoly(const json& j) {
  std::ostringstream os;
  if (j.empty()) os << "  0\n";
  for (const auto& term : j) {
    os << "  " << std::setw(24) << std::left << powers_text(term["powers"]) << std::right << std::setw(16)
       << term["coeff"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string render_chartable(const json& j) {
  std::ostringstream os;
  const auto& values = j["values"];
  std::size_t width = 6;
  for (const auto& row : values) {
    for (const auto& v : row) width = std::max(width, v.get<std::string>().size() + 1);
  }
  std::size_t label = 8;
  for (const auto& p : j["rows"]) label = std::max(label, partition_text(p).size() + 2);
  os << std::setw(static_cast<int>(label)) << std::left << "chi\\mu" << std::right;
  for (const auto& p : j["columns"]) os << std::setw(static_cast<int>(std::max(width, partition_text(p).size() + 1))) << partition_text(p);
  os << "\n";
  for (std::size_t r = 0; r < values.size(); ++r) {
    os << std::setw(static_cast<int>(label)) << std::left << partition_text(j["rows"][r]) << std::right;
    for (std::size_t c = 0; c < values[r].size(); ++c) {
      const auto w = std::max(width, partition_text(j["columns"][c]).size() + 1);
      os << std::setw(static_cast<int>(w)) << values[r][c].get<std::string>();
    }
    os << "\n";
  }
  return os.str();
}

std::string render_betti(const json& j) {
  std::ostringstream os;
  os << "degree  rank\n";
  for (std::size_t i = 0; i < j.size(); ++i) os << std::setw(6) << i << std::setw(6) << j[i].get<std::uint64_t>() << "\n";
  return os.str();
}

std::string render_presentation(const json& j) {
  std::ostringstream os;
  os << "n = " << j["n"].get<int>() << ", relations through degree " << j["max_degree"].get<int>() << "\n";
  os << "generators:";
  for (const auto& g : j["generators"]) os << " " << g.get<std::string>();
  os << "\nrelations:\n";
  for (const auto& r : j["relations"]) {
    os << "  r_" << std::setw(18) << std::left << partition_text(r["lambda"]) << std::right << r["text"].get<std::string>()
       << "\n";
  }
  os << "betti:";
  for (const auto& b : j["betti"]) os << " " << b.get<std::uint64_t>();
  os << "\nverified: " << (j["verified"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& f : j["failures"]) os << "  FAIL " << f.get<std::string>() << "\n";
  return os.str();
}

std::string render_det_check(const json& j) {
  std::ostringstream os;
  os << std::setw(3) << "d" << std::setw(5) << "n" << std::setw(16) << "|det A|" << std::setw(16) << "formula A"
     << std::setw(16) << "|det B|" << std::setw(16) << "formula B" << std::setw(8) << "ratio" << "  status\n";
  for (const auto& row : j["rows"]) {
    os << std::setw(3) << row["d"].get<int>() << std::setw(5) << row["n"].get<int>() << std::setw(16)
       << row["abs_det_A"].get<std::string>() << std::setw(16) << row["formula_A"].get<std::string>() << std::setw(16)
       << row["abs_det_B"].get<std::string>() << std::setw(16) << row["formula_B"].get<std::string>() << std::setw(8)
       << row["ratio"].get<std::string>() << "  " << (row["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

std::string render_verify(const json& j) {
  std::ostringstream os;
  for (const auto& s : j["suites"]) {
    os << (s["passed"].get<bool>() ? "PASS " : "FAIL ") << std::setw(16) << std::left << s["suite"].get<std::string>()
       << std::right << std::setw(8) << s["cases"].get<std::size_t>() << " cases";
    if (s.contains("counterexample")) os << "\n     first counterexample: " << s["counterexample"].get<std::string>();
    os << "\n";
  }
  os << (j["passed"].get<bool>() ? "all suites passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded cup product on class functions of symmetric groups and the cohomology of Hilbert schemes "
               "of points in the plane"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  std::string engine_name = "auto";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");
  app.add_option("--engine", engine_name, "Structure-constant engine")
      ->check(CLI::IsMember({"bruteforce", "character", "auto"}));

  int n = -1;
  int max_n = 6;
  int max_d = 0;
  int max_degree = 0;
  std::string f_json, g_json, suite;

  auto* cup_cmd = app.add_subcommand("cup", "Cup product of two class functions");
  auto* conv_cmd = app.add_subcommand("conv", "Convolution product of two class functions");
  for (auto* cmd : {cup_cmd, conv_cmd}) {
    cmd->add_option("--n", n, "Conformal weight");
    cmd->add_option("--f", f_json, "First class function (JSON or @file)")->required();
    cmd->add_option("--g", g_json, "Second class function (JSON or @file)")->required();
  }
  auto* chartable_cmd = app.add_subcommand("chartable", "Irreducible character table of S_n");
  chartable_cmd->add_option("--n", n, "Conformal weight")->required()->check(CLI::NonNegativeNumber);
  auto* phi_cmd = app.add_subcommand("phi", "Image of a class function in the power-sum ring");
  phi_cmd->add_option("--f", f_json, "Class function (JSON or @file)")->required();
  phi_cmd->add_option("--n", n, "Conformal weight");
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers p(n, n-i)");
  betti_cmd->add_option("--n", n, "Number of points")->required()->check(CLI::NonNegativeNumber);
  auto* pres_cmd = app.add_subcommand("presentation", "Generators and relations of the cohomology ring");
  pres_cmd->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  pres_cmd->add_option("--max-degree", max_degree, "Largest relation degree (default n)")->check(CLI::PositiveNumber);
  auto* det_cmd = app.add_subcommand("det-check", "Change-of-basis determinants against the product formulas");
  det_cmd->add_option("--max-d", max_d, "Largest degree d (n = 2d)")->required()->check(CLI::PositiveNumber);
  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest conformal weight")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-d", max_d, "Largest degree for det and relations suites")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  const hc_engine engine = parse_engine(engine_name);
  const bool text = format == "text";
  std::string output;
  int exit_code = kExitOk;

  try {
    const std::optional<int> expected_n = n >= 0 ? std::optional<int>(n) : std::nullopt;
    if (cup_cmd->parsed() || conv_cmd->parsed()) {
      auto f = parse_class_function("--f", f_json, expected_n);
      auto g = parse_class_function("--g", g_json, expected_n);
      hc_class_function* raw = nullptr;
      if (cup_cmd->parsed()) check(hc_cup(f.get(), g.get(), engine, &raw), "cup");
      else check(hc_convolve(f.get(), g.get(), engine, &raw), "conv");
      ClassFunctionHandle result(raw);
      char* s = nullptr;
      check(hc_class_function_to_json(result.get(), &s), "serialize");
      output = take(s);
      if (text) output = render_class_function(json::parse(output));
    } else if (chartable_cmd->parsed()) {
      char* s = nullptr;
      check(hc_chartable_json(n, &s), "chartable");
      output = take(s);
      if (text) output = render_chartable(json::parse(output));
    } else if (phi_cmd->parsed()) {
      auto f = parse_class_function("--f", f_json, expected_n);
      hc_ppoly* raw = nullptr;
      check(hc_phi(f.get(), &raw), "phi");
      PPolyHandle q(raw);
      char* s = nullptr;
      check(hc_ppoly_to_json(q.get(), &s), "serialize");
      output = take(s);
      if (text) output = render_ppoly(json::parse(output));
    } else if (betti_cmd->parsed()) {
      char* s = nullptr;
      check(hc_betti_json(n, &s), "betti");
      output = take(s);
      if (text) output = render_betti(json::parse(output));
    } else if (pres_cmd->parsed()) {
      char* s = nullptr;
      int passed = 0;
      check(hc_presentation_json(n, max_degree, engine, &s, &passed), "presentation");
      output = take(s);
      if (!passed) exit_code = kExitVerificationFailed;
      if (text) output = render_presentation(json::parse(output));
    } else if (det_cmd->parsed()) {
      char* s = nullptr;
      int passed = 0;
      check(hc_det_check_json(max_d, engine, &s, &passed), "det-check");
      output = take(s);
      if (!passed) exit_code = kExitVerificationFailed;
      if (text) output = render_det_check(json::parse(output));
    } else if (verify_cmd->parsed()) {
      char* s = nullptr;
      int passed = 0;
      check(hc_verify_json(suite.c_str(), max_n, max_d, engine, &s, &passed), "verify");
      output = take(s);
      if (!passed) exit_code = kExitVerificationFailed;
      if (text) output = render_verify(json::parse(output));
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  }

  if (!output.empty() && output.back() != '\n') output += '\n';
  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << output;
  }
  return exit_code;
}
