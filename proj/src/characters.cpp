#include "hilbcup/characters.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>

#include "hilbcup/error.hpp"

namespace hilbcup {

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;
using Memo = std::map<MemoKey, mpz_class>;

// Border strips are removed for the largest remaining cycle first, so the
// remaining cycle type is always a suffix of mu.
mpz_class mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos,
                     Memo& memo) {
  if (pos == mu.size()) return lambda.empty() ? 1 : 0;

  MemoKey key{lambda, std::vector<int>(mu.begin() + static_cast<long>(pos), mu.end())};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int k = mu[pos];
  const int len = static_cast<int>(lambda.size());
  // beta-set: first-column hook lengths, strictly decreasing.
  std::vector<int> beta(len);
  for (int j = 0; j < len; ++j) beta[j] = lambda[j] + (len - 1 - j);

  mpz_class total = 0;
  for (int j = 0; j < len; ++j) {
    const int target = beta[j] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Beads jumped over determine the height of the strip.
    int between = 0;
    for (int b : beta) between += (b > target && b < beta[j]) ? 1 : 0;

    std::vector<int> moved = beta;
    moved[j] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> reduced;
    for (int i = 0; i < len; ++i) {
      const int part = moved[i] - (len - 1 - i);
      if (part > 0) reduced.push_back(part);
    }
    mpz_class sub = mn_recurse(reduced, mu, pos + 1, memo);
    if (between % 2) total -= sub;
    else total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

int initial_limit() {
  if (const char* env = std::getenv("HILBCUP_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (...) {
    }
  }
  return 14;
}

std::atomic<int>& limit_ref() {
  static std::atomic<int> limit{initial_limit()};
  return limit;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n), partitions_(enumerate(n)) {
  const std::size_t k = partitions_.size();
  for (std::size_t i = 0; i < k; ++i) index_.emplace(partitions_[i], i);
  entries_.resize(k * k);
  Memo memo;
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t col = 0; col < k; ++col) {
      entries_[row * k + col] = mn_recurse(partitions_[row].parts(), partitions_[col].parts(), 0, memo);
    }
  }
}

std::size_t CharacterTable::index_of(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) {
    throw Error(ErrorCode::WeightMismatch,
                lambda.to_string() + " is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

mpz_class mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw Error(ErrorCode::WeightMismatch,
                "mn_character(" + lambda.to_string() + ", " + mu.to_string() + ")");
  }
  Memo memo;
  return mn_recurse(lambda.parts(), mu.parts(), 0, memo);
}

int character_table_limit() { return limit_ref().load(); }
void set_character_table_limit(int limit) { limit_ref().store(limit); }

std::shared_ptr<const CharacterTable> character_table(int n) {
  if (n < 0 || n > character_table_limit()) {
    throw Error(ErrorCode::BoundExceeded, "character table for n = " + std::to_string(n) +
                                              " exceeds limit " +
                                              std::to_string(character_table_limit()));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Built outside the lock; a racing builder produces an identical table and
  // the first one published wins.
  auto table = std::make_shared<const CharacterTable>(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace hilbcup
