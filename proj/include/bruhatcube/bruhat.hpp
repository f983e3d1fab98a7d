#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhatcube/permutation.hpp"

namespace bruhatcube {

/// E_w(i, j) = #{k <= j : w(k) >= i}, stored row-major.
class EhresmannMatrix {
 public:
  explicit EhresmannMatrix(const Permutation& w);

  int size() const { return n_; }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }

  /// Entrywise comparison; this is the Bruhat comparison of the two permutations.
  friend bool entrywise_leq(const EhresmannMatrix& a, const EhresmannMatrix& b);

 private:
  int n_;
  std::vector<std::uint16_t> entries_;
};

EhresmannMatrix ehresmann(const Permutation& w);

/// x <= y in Bruhat order, by the Ehresmann criterion with early exit.
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// Elements covering x (y = x t, l(y) = l(x) + 1), optionally restricted to y <= ceiling.
/// Sorted lexicographically.
std::vector<Permutation> covers(const Permutation& x,
                                const std::optional<Permutation>& ceiling = std::nullopt);

/// The interval [bottom, top] with its Hasse diagram.
///
/// Elements are sorted by (rank, one-line form); hasse_edges index into
/// elements as (lower, upper).
struct IntervalPoset {
  Permutation bottom;
  Permutation top;
  std::vector<Permutation> elements;
  std::vector<int> rank;
  std::vector<std::pair<int, int>> hasse_edges;

  std::optional<int> index_of(const Permutation& p) const;
  int length() const { return rank.empty() ? 0 : rank.back(); }

  std::unordered_map<Permutation, int, PermutationHash> index;
};

/// Upward cover-BFS from x pruned by z <= y. Throws DomainError if x is not below y.
IntervalPoset interval(const Permutation& x, const Permutation& y);

/// Rank k when [x, y] is isomorphic to the boolean lattice B_k.
std::optional<int> is_boolean_interval(const IntervalPoset& iv);
std::optional<int> is_boolean_interval(const Permutation& x, const Permutation& y);

struct BruhatEdge {
  int from;  // u, the lower endpoint
  int to;    // v
  std::pair<int, int> label;  // transposition (a, b), a < b, with u = t v
};

struct BruhatGraph {
  std::vector<Permutation> vertices;
  std::vector<BruhatEdge> edges;
};

/// All edges u -> v inside the interval with u = t v for a transposition t and u < v.
BruhatGraph bruhat_graph(const IntervalPoset& iv);

}  // namespace bruhatcube
