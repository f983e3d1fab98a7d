#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bruhatcube/permutation.hpp"

namespace bruhatcube {

struct CensusRow {
  int k = 0;
  std::int64_t total = 0;
  std::int64_t hypercubes = 0;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// For each k in [k_min, k_max]: the number of pairs x <= y in S_n with
/// l(y) - l(x) = k, and how many of those intervals are boolean. Exact mode
/// refuses n > 7 unless force.
std::vector<CensusRow> interval_census(int n, int k_min, int k_max, unsigned threads, bool force = false);
/// All k from 1 to n(n-1)/2.
std::vector<CensusRow> interval_census(int n, unsigned threads, bool force = false);

struct MaxDResult {
  int n = 1;
  int f = 0;
  Permutation x;
  Permutation y;
};

/// f(n) = max d_{x,y} over x <= y in S_n, with the lexicographically least
/// witness (x first, then y). Refuses n > 7 unless force.
MaxDResult max_d(int n, unsigned threads, bool force = false);

/// Which transcription of the generator program to evaluate.
enum class GeneratorProgram {
  first,   // second word's tail starts at n / 3
  second,  // head runs to n - 1, tail starts at n / 4
  start3,  // tail starts at 3
};

struct GeneratedPair {
  Permutation x;
  Permutation y;
  Word a;
  Word b;
  /// Letters outside 1..n-1 removed from the program output.
  std::vector<int> dropped;
};

/// Pair produced by the evolved word programs; n >= 5 (n >= 8 for start3).
GeneratedPair funsearch_pair(int n, GeneratorProgram program = GeneratorProgram::first);
GeneratedPair funsearch_pair_start3(int n);

/// x = (2,5)(4,7)(6,9)(8,11), y = (1,12)(2,4)(3,6)(5,8)(7,10)(9,11) in S_12.
std::pair<Permutation, Permutation> baseline_n12();

struct SearchState {
  Permutation x;
  Permutation y;
  std::int64_t score = -1;  // d_{x,y} when x <= y, else -1
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t evaluations = 0;
  std::int64_t initial_score = -1;
};

/// Seeded first-improvement hill climb on pairs. Moves multiply x or y by a
/// transposition on either side; a move is accepted only when the pair stays
/// comparable and the score strictly improves. At a local optimum the search
/// restarts from a fresh seeded pair. `budget` bounds neighbor evaluations;
/// the best pair seen is returned.
SearchState local_search_d(int n, std::uint64_t seed, std::uint64_t budget);
SearchState local_search_d(const Permutation& x, const Permutation& y, std::uint64_t seed,
                           std::uint64_t budget);

enum class VerifyMode { full, sampled };

struct TheoremReport {
  int m = 1;
  VerifyMode mode = VerifyMode::full;
  bool passed = false;
  std::size_t rank = 0;
  std::size_t elements = 0;          // full: |DWD_m|; sampled: decoded samples checked
  std::size_t pairs_checked = 0;     // order-isomorphism pairs
  std::size_t comparable_pairs = 0;  // pairs with p <= q
  std::vector<std::string> failures;
};

/// Full mode (m <= 3): DWD_m by brute force over S_{2^m}, the interval
/// [x_m, y_m] and the decoded cube are the same set; the interval is boolean of
/// rank m 2^{m-1}; phi is an order isomorphism on every pair. Sampled mode:
/// `sample_size` coordinate pairs for the order biconditional, and
/// `sample_size` decoded elements checked for dwd and x_m <= z <= y_m.
TheoremReport verify_main_theorem(int m, VerifyMode mode, std::size_t sample_size, std::uint64_t seed,
                                  unsigned threads = 1);

}  // namespace bruhatcube
