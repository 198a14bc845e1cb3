#include "hilbcup/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hilbcup/error.hpp"

namespace hilbcup {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WeightMismatch: return "WEIGHT_MISMATCH";
    case ErrorCode::Infeasible: return "INFEASIBLE";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::NonIntegerResult: return "NON_INTEGER_RESULT";
    case ErrorCode::MixedWeight: return "MIXED_WEIGHT";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::SingularBasis: return "SINGULAR_BASIS";
    case ErrorCode::NonIntegerCoefficient: return "NON_INTEGER_COEFFICIENT";
    case ErrorCode::UnknownSuite: return "UNKNOWN_SUITE";
    case ErrorCode::Parse: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw Error(ErrorCode::Parse, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiplicities(const std::vector<int>& mult) {
  std::vector<int> parts;
  for (int i = static_cast<int>(mult.size()) - 1; i >= 1; --i) {
    if (mult[i] < 0) throw Error(ErrorCode::Infeasible, "negative multiplicity");
    parts.insert(parts.end(), mult[i], i);
  }
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(n, 1)); }

int Partition::multiplicity(int i) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(weight_ + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

Partition Partition::with_part(int part) const {
  auto parts = parts_;
  parts.push_back(part);
  return Partition(std::move(parts));
}

std::optional<Partition> Partition::without_part(int part) const {
  auto it = std::find(parts_.begin(), parts_.end(), part);
  if (it == parts_.end()) return std::nullopt;
  auto parts = parts_;
  parts.erase(parts.begin() + (it - parts_.begin()));
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "enumerate: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  generate(n, n, current, out);
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

std::uint64_t count_into_parts(int n, int k) {
  if (n < 0 || k < 0 || k > n) return (n == 0 && k == 0) ? 1 : 0;
  // p(m, j) = p(m - 1, j - 1) + p(m - j, j)
  std::vector<std::vector<std::uint64_t>> p(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  p[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = 1; j <= std::min(m, k); ++j) p[m][j] = p[m - 1][j - 1] + p[m - j][j];
  }
  return p[n][k];
}

std::uint64_t count_partitions(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  }
  return p[n];
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class z_value(const Partition& lambda) {
  mpz_class z = 1;
  const auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
    z *= power * factorial(m[i]);
  }
  return z;
}

mpz_class class_size(const Partition& lambda) {
  mpz_class size = factorial(lambda.weight());
  mpz_divexact(size.get_mpz_t(), size.get_mpz_t(), z_value(lambda).get_mpz_t());
  return size;
}

std::optional<Partition> try_associate(const Partition& lambda, int n) {
  if (associate_threshold(lambda) > n) return std::nullopt;
  std::vector<int> parts;
  parts.reserve(n - lambda.weight());
  for (int p : lambda.parts()) parts.push_back(p + 1);
  parts.insert(parts.end(), n - associate_threshold(lambda), 1);
  return Partition(std::move(parts));
}

Partition associate(const Partition& lambda, int n) {
  auto result = try_associate(lambda, n);
  if (!result) {
    throw Error(ErrorCode::Infeasible, "associate(" + lambda.to_string() + ", " + std::to_string(n) +
                                           "): alpha'_1 = " +
                                           std::to_string(n - associate_threshold(lambda)));
  }
  return *std::move(result);
}

Partition deassociate(const Partition& nu) {
  std::vector<int> parts;
  for (int p : nu.parts()) {
    if (p > 1) parts.push_back(p - 1);
  }
  return Partition(std::move(parts));
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw Error(ErrorCode::WeightMismatch,
                "lex_compare(" + a.to_string() + ", " + b.to_string() + ")");
  }
  const int w = a.weight();
  for (int i = 1; i <= w; ++i) {
    if (auto c = a.multiplicity(i) <=> b.multiplicity(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  // Multiplicity sequences compared from part 1 upward; equivalent to
  // lex_compare without the weight check.
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  auto ia = pa.rbegin();
  auto ib = pb.rbegin();
  for (int i = 1; i <= a.weight(); ++i) {
    int ma = 0, mb = 0;
    while (ia != pa.rend() && *ia == i) ++ma, ++ia;
    while (ib != pb.rend() && *ib == i) ++mb, ++ib;
    if (ma != mb) return ma < mb;
    if (ia == pa.rend() && ib == pb.rend()) return false;
  }
  return false;
}

}  // namespace hilbcup
