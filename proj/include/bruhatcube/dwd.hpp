#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bruhatcube/permutation.hpp"

namespace bruhatcube {

/// [index * 2^level, (index + 1) * 2^level - 1] inside [2^m]; equivalently the
/// set of m-bit strings with a fixed (m - level)-bit prefix.
struct BasicInterval {
  int level = 0;
  std::int64_t index = 0;

  std::int64_t first() const { return index << level; }
  std::int64_t last() const { return ((index + 1) << level) - 1; }
  bool contains(std::int64_t v) const { return (v >> level) == index; }
  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

/// A domain interval and a value interval whose levels sum to m + 1.
struct ComplementaryBlock {
  BasicInterval domain;
  BasicInterval range;
  friend bool operator==(const ComplementaryBlock&, const ComplementaryBlock&) = default;
};

/// Canonical order: lexicographic in (domain.level, domain.index, range.index).
/// There are m 2^{m-1} blocks.
std::vector<ComplementaryBlock> complementary_blocks(int m);
std::size_t block_position(int m, const ComplementaryBlock& b);

/// One bit per complementary block in canonical order: 0 for the increasing
/// pattern, 1 for the decreasing one.
class CubeCoordinates {
 public:
  explicit CubeCoordinates(int m);  // all zero
  CubeCoordinates(int m, std::vector<std::uint8_t> bits);

  static CubeCoordinates all_ones(int m);
  /// Bits taken from the low end of `value` (bit i of value -> block i). Requires m <= 3 or
  /// rank <= 64.
  static CubeCoordinates from_integer(int m, std::uint64_t value);

  int m() const { return m_; }
  std::size_t rank() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void toggle(std::size_t i) { bits_[i] ^= 1; }
  std::size_t weight() const;

  /// Coordinatewise <=, i.e. the set of 1-bits is contained in other's.
  bool subset_of(const CubeCoordinates& other) const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const CubeCoordinates&, const CubeCoordinates&) = default;

 private:
  int m_;
  std::vector<std::uint8_t> bits_;
};

/// Bit string in canonical order, e.g. "0110" for m = 2.
std::string to_string(const CubeCoordinates& c);
CubeCoordinates parse_cube_coordinates(int m, std::string_view text);

/// log2(n) when n is a power of two, else -1.
int log2_exact(std::int64_t n);

/// Definition check: for every domain k1-interval S and value k2-interval T with
/// k1 + k2 = m, exactly one i in S has p(i) in T. Throws InputError when the degree
/// is not a power of two.
bool is_dwd(const Permutation& p);

/// Bit reversal of m-bit indices.
Permutation gen_x(int m);
/// Complemented bit reversal.
Permutation gen_y(int m);

CubeCoordinates encode_phi(const Permutation& p);
/// Determines each image bit by bit from the coarsest domain split to the finest.
Permutation decode_phi(const CubeCoordinates& c);

/// Swaps the images of the two points of block.domain that land in block.range.
Permutation flip(const Permutation& p, const ComplementaryBlock& block);

/// Full enumeration refuses m 2^{m-1} > 24 unless force is set.
std::vector<Permutation> enumerate_dwd(int m, bool force = false);
void for_each_dwd(int m, const std::function<void(const CubeCoordinates&, const Permutation&)>& visit,
                  bool force = false);
/// Decodes `count` seeded uniformly random coordinate vectors.
std::vector<Permutation> sample_dwd(int m, std::size_t count, std::uint64_t seed);

}  // namespace bruhatcube
