#include "hilbcup/group_ring.hpp"

#include <algorithm>
#include <numeric>

#include "hilbcup/error.hpp"

namespace hilbcup {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= n() || seen[x]) throw Error(ErrorCode::Parse, "not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::of_type(const Partition& type) {
  std::vector<int> images(type.weight());
  int start = 0;
  for (int len : type.parts()) {
    for (int i = 0; i < len; ++i) images[start + i] = start + (i + 1) % len;
    start += len;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < n(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int x = 0; x < n(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Permutation Permutation::embed() const {
  auto images = images_;
  images.push_back(n());
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& sigma, const Permutation& pi) {
  if (sigma.n() != pi.n()) throw Error(ErrorCode::WeightMismatch, "compose: different degrees");
  std::vector<int> images(pi.n());
  for (int x = 0; x < pi.n(); ++x) images[x] = sigma(pi(x));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

GroupRingElement GroupRingElement::from_class_function(const ClassFunction& f) {
  GroupRingElement out(f.n());
  for (auto& pi : all_permutations(f.n())) {
    const mpz_class c = f.coefficient(pi.cycle_type());
    if (c != 0) out.terms_.emplace(std::move(pi), c);
  }
  return out;
}

void GroupRingElement::add(const Permutation& pi, const mpz_class& c) {
  if (pi.n() != n_) throw Error(ErrorCode::WeightMismatch, "permutation of wrong degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(pi, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::WeightMismatch, "group ring product");
  GroupRingElement out(n_);
  for (const auto& [a, x] : terms_) {
    for (const auto& [b, y] : other.terms_) out.add(compose(a, b), x * y);
  }
  return out;
}

GroupRingElement GroupRingElement::cup(const GroupRingElement& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::WeightMismatch, "group ring cup");
  GroupRingElement out(n_);
  for (const auto& [a, x] : terms_) {
    const int da = a.degree();
    for (const auto& [b, y] : other.terms_) {
      Permutation ab = compose(a, b);
      if (ab.degree() == da + b.degree()) out.add(ab, x * y);
    }
  }
  return out;
}

GroupRingElement GroupRingElement::embed() const {
  GroupRingElement out(n_ + 1);
  for (const auto& [pi, c] : terms_) out.terms_.emplace(pi.embed(), c);
  return out;
}

GroupRingElement GroupRingElement::conjugation_sum() const {
  GroupRingElement out(n_);
  for (const auto& t : all_permutations(n_)) {
    const Permutation t_inv = t.inverse();
    for (const auto& [pi, c] : terms_) out.add(compose(compose(t, pi), t_inv), c);
  }
  return out;
}

bool GroupRingElement::is_class_function() const {
  std::map<Partition, mpz_class> value;
  std::map<Partition, std::size_t> support;
  for (const auto& [pi, c] : terms_) {
    const Partition type = pi.cycle_type();
    auto [it, inserted] = value.try_emplace(type, c);
    if (!inserted && it->second != c) return false;
    ++support[type];
  }
  for (const auto& [type, count] : support) {
    if (class_size(type) != count) return false;
  }
  return true;
}

ClassFunction GroupRingElement::to_class_function() const {
  if (!is_class_function()) {
    throw Error(ErrorCode::NonIntegerResult, "group ring element is not a class function");
  }
  ClassFunction out(n_);
  std::map<Partition, mpz_class> seen;
  for (const auto& [pi, c] : terms_) seen.try_emplace(pi.cycle_type(), c);
  for (const auto& [type, c] : seen) out.add(type, c);
  return out;
}

ClassFunction induce_r1_bruteforce(const ClassFunction& f) {
  const GroupRingElement sum = GroupRingElement::from_class_function(f).embed().conjugation_sum();
  const mpz_class n_factorial = factorial(f.n());
  GroupRingElement scaled(f.n() + 1);
  for (const auto& [pi, c] : sum.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), n_factorial.get_mpz_t())) {
      throw Error(ErrorCode::NonIntegerResult, "r1 symmetrization is not divisible by n!");
    }
    scaled.add(pi, c / n_factorial);
  }
  return scaled.to_class_function();
}

}  // namespace hilbcup
