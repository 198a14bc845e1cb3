#pragma once

#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "hilbcup/partition.hpp"

namespace hilbcup {

// Irreducible character table of S_n. Rows are irreducibles chi^lambda,
// columns are classes mu; both follow enumerate(n) order. Immutable once built.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return partitions_.size(); }
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }
  std::size_t index_of(const Partition& lambda) const;

  const mpz_class& at(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }
  const mpz_class& operator()(const Partition& lambda, const Partition& mu) const {
    return at(index_of(lambda), index_of(mu));
  }
  // chi^lambda((1^n))
  const mpz_class& dimension(std::size_t row) const { return at(row, size() - 1); }

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::map<Partition, std::size_t> index_;
  std::vector<mpz_class> entries_;
};

// chi^lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama).
// Throws Error(WeightMismatch) if |lambda| != |mu|.
mpz_class mn_character(const Partition& lambda, const Partition& mu);

// Cached table for S_n; built at most once per n. Throws
// Error(BoundExceeded) when n exceeds character_table_limit().
std::shared_ptr<const CharacterTable> character_table(int n);

// Defaults to 14, or HILBCUP_MAX_N from the environment when set.
int character_table_limit();
void set_character_table_limit(int limit);

}  // namespace hilbcup
