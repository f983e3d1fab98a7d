#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

#include "bruhatcube/bruhat.hpp"
#include "bruhatcube/permutation.hpp"
#include "bruhatcube/polynomial.hpp"

namespace bruhatcube {

/// Memo table for R-polynomials shared between queries and threads.
/// Inserts are idempotent: concurrent writers store equal values.
class RPolynomialCache {
 public:
  std::optional<IntPolynomial> find(const Permutation& x, const Permutation& y) const;
  void insert(const Permutation& x, const Permutation& y, const IntPolynomial& r);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<Permutation, Permutation>, IntPolynomial, PermutationPairHash> table_;
};

/// Kazhdan-Lusztig R-polynomial R_{x,y}(q), descending on the smallest right descent of y.
IntPolynomial r_polynomial(const Permutation& x, const Permutation& y);
IntPolynomial r_polynomial(const Permutation& x, const Permutation& y, RPolynomialCache& cache);

/// d_{x,y}: the negated coefficient of q^{l(y)-l(x)-1} in R_{x,y}, via the
/// single-branch descent recursion (one Bruhat comparison per step).
/// Throws DomainError unless x <= y.
std::int64_t d_invariant(const Permutation& x, const Permutation& y);

/// d_{x,y} read off r_polynomial(x, y).
std::int64_t d_from_r(const Permutation& x, const Permutation& y);

/// Minimum size of a Hasse-edge subset whose diamond closure is every Hasse
/// edge. Exhaustive over subsets; refuses intervals with more than `edge_cap`
/// edges (SizeLimitError).
///
/// Closure rule: whenever two edges of a diamond sharing a vertex are in the
/// set, the other two edges of that diamond are added.
int d_via_diamond_closure(const IntervalPoset& iv, int edge_cap = 16);

/// n - 1 + floor((n - 2) / 2); throws InputError for n < 2.
std::int64_t reading_lower_bound(std::int64_t n);

}  // namespace bruhatcube
