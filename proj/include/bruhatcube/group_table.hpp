#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bruhatcube/permutation.hpp"

namespace bruhatcube {

/// All of S_n indexed in lexicographic order, with the Bruhat order stored as
/// up-set and down-set bitsets. Built by closing the cover relation, so it is
/// independent of the Ehresmann comparison. Used by the exhaustive census and
/// f(n) computations; supports n <= 8.
class SymmetricGroupTable {
 public:
  explicit SymmetricGroupTable(int n);

  int degree() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& element(std::size_t i) const { return perms_[i]; }
  std::size_t index_of(const Permutation& p) const;

  int length(std::size_t i) const { return length_[i]; }
  /// Index of element(i) * s_s, 1 <= s < n.
  std::uint32_t times_simple(std::size_t i, int s) const {
    return right_simple_[i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(s)];
  }
  /// Smallest s with element(i) * s_s < element(i); 0 for the identity.
  int first_descent(std::size_t i) const { return first_descent_[i]; }
  std::span<const std::uint32_t> covers(std::size_t i) const { return covers_[i]; }

  bool leq(std::size_t x, std::size_t y) const {
    return (up_[x * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  std::span<const std::uint64_t> up_set(std::size_t x) const { return {up_.data() + x * words_, words_}; }
  std::span<const std::uint64_t> down_set(std::size_t y) const { return {down_.data() + y * words_, words_}; }
  std::size_t words() const { return words_; }

  /// d_{x,y} by the descent recursion using table lookups; requires leq(x, y).
  int d_invariant(std::size_t x, std::size_t y) const;

  /// |[x, y]|.
  std::size_t interval_size(std::size_t x, std::size_t y) const;
  /// Boolean-lattice test on [x, y] (same algorithm as is_boolean_interval); returns
  /// the rank or -1.
  int boolean_rank(std::size_t x, std::size_t y) const;

 private:
  int n_;
  std::size_t words_;
  std::vector<Permutation> perms_;
  std::vector<int> length_;
  std::vector<std::uint32_t> right_simple_;
  std::vector<int> first_descent_;
  std::vector<std::vector<std::uint32_t>> covers_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

/// Lexicographic rank of p among all permutations of its degree.
std::uint64_t lexicographic_rank(const Permutation& p);

}  // namespace bruhatcube
