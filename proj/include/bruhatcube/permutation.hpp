#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bruhatcube {

/// A bijection of {0, ..., n-1} in one-line form: image()[i] is the value at i.
///
/// Values are immutable once constructed. Ordering is lexicographic on the
/// one-line form, which is the canonical key used for deduplication.
class Permutation {
 public:
  /// The identity of degree 1.
  Permutation() : image_{0} {}

  /// Validates that `image` is a bijection of {0, ..., image.size()-1}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return image_; }

  bool is_identity() const;

  /// Right multiplication by the transposition of positions a and b.
  Permutation swap_positions(int a, int b) const;
  /// Left multiplication by the transposition of values a and b.
  Permutation swap_values(int a, int b) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation longest_element(int);
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

struct PermutationPairHash {
  std::size_t operator()(const std::pair<Permutation, Permutation>& pq) const noexcept;
};

/// A word in the simple reflections s_1, ..., s_{n-1} (1-indexed letters).
using Word = std::vector<int>;

/// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// Number of inversions.
std::int64_t length(const Permutation& p);

/// s_{w_1} o s_{w_2} o ... o s_{w_k}, where s_i swaps positions i-1 and i.
Permutation from_word(int n, const Word& w);

/// i -> n-1-i.
Permutation longest_element(int n);

/// Product of 1-indexed transpositions (a b), composed left to right.
Permutation from_cycles(int n, const std::vector<std::pair<int, int>>& transpositions);

/// The transposition exchanging a and b (0-indexed).
Permutation transposition(int n, int a, int b);

/// Parses "0 2 1 3" or "0,2,1,3".
Permutation parse_permutation(std::string_view text);

/// Space-separated one-line form; parse_permutation(to_string(p)) == p.
std::string to_string(const Permutation& p);

/// Parses "(2,5)(4,7)" into 1-indexed pairs.
std::vector<std::pair<int, int>> parse_transpositions(std::string_view text);

/// Descent test for the simple reflection s_i (1-indexed): p s_i < p.
inline bool has_right_descent(const Permutation& p, int i) { return p(i - 1) > p(i); }

}  // namespace bruhatcube
