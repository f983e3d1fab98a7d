#include "bruhatcube/group_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bruhatcube/errors.hpp"

namespace bruhatcube {

std::uint64_t lexicographic_rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (int j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller_later;
    rank = rank * static_cast<std::uint64_t>(n - i) + smaller_later;
  }
  return rank;
}

SymmetricGroupTable::SymmetricGroupTable(int n) : n_(n) {
  if (n < 1 || n > 8) throw SizeLimitError("group table supports 1 <= n <= 8");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  do {
    perms_.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  const std::size_t size = perms_.size();
  words_ = (size + 63) / 64;

  length_.resize(size);
  right_simple_.assign(size * static_cast<std::size_t>(n), 0);
  first_descent_.assign(size, 0);
  covers_.resize(size);
  std::vector<std::vector<std::uint32_t>> covered_by(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Permutation& p = perms_[i];
    length_[i] = static_cast<int>(bruhatcube::length(p));
    for (int s = 1; s < n; ++s) {
      right_simple_[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)] =
          static_cast<std::uint32_t>(lexicographic_rank(p.swap_positions(s - 1, s)));
      if (first_descent_[i] == 0 && has_right_descent(p, s)) first_descent_[i] = s;
    }
    for (int a = 0; a < n; ++a) {
      int lowest_above = n;
      for (int b = a + 1; b < n; ++b) {
        const int v = p(b);
        if (v > p(a) && v < lowest_above) {
          const auto c = static_cast<std::uint32_t>(lexicographic_rank(p.swap_positions(a, b)));
          covers_[i].push_back(c);
          covered_by[c].push_back(static_cast<std::uint32_t>(i));
          lowest_above = v;
        }
      }
    }
    std::sort(covers_[i].begin(), covers_[i].end());
  }

  // Close the cover relation: up(x) = {x} u up(covers of x), longest first.
  std::vector<std::size_t> by_length(size);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return length_[a] < length_[b]; });
  up_.assign(size * words_, 0);
  down_.assign(size * words_, 0);
  for (auto it = by_length.rbegin(); it != by_length.rend(); ++it) {
    const std::size_t x = *it;
    std::uint64_t* row = up_.data() + x * words_;
    row[x >> 6] |= std::uint64_t{1} << (x & 63);
    for (std::uint32_t c : covers_[x]) {
      const std::uint64_t* other = up_.data() + c * words_;
      for (std::size_t w = 0; w < words_; ++w) row[w] |= other[w];
    }
  }
  for (std::size_t y : by_length) {
    std::uint64_t* row = down_.data() + y * words_;
    row[y >> 6] |= std::uint64_t{1} << (y & 63);
    for (std::uint32_t c : covered_by[y]) {
      const std::uint64_t* other = down_.data() + c * words_;
      for (std::size_t w = 0; w < words_; ++w) row[w] |= other[w];
    }
  }
}

std::size_t SymmetricGroupTable::index_of(const Permutation& p) const {
  if (p.size() != n_) throw InputError("degree mismatch with group table");
  return static_cast<std::size_t>(lexicographic_rank(p));
}

int SymmetricGroupTable::d_invariant(std::size_t x, std::size_t y) const {
  std::size_t u = x, v = y;
  int d = 0;
  while (u != v) {
    const int s = first_descent_[v];
    const std::size_t vs = times_simple(v, s);
    const std::size_t us = times_simple(u, s);
    if (length_[us] < length_[u])
      u = us;
    else if (!leq(us, vs))
      ++d;
    v = vs;
  }
  return d;
}

std::size_t SymmetricGroupTable::interval_size(std::size_t x, std::size_t y) const {
  const std::uint64_t* a = up_.data() + x * words_;
  const std::uint64_t* b = down_.data() + y * words_;
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return count;
}

int SymmetricGroupTable::boolean_rank(std::size_t x, std::size_t y) const {
  if (!leq(x, y)) return -1;
  const int k = length_[y] - length_[x];
  if (k > 24) return -1;
  const std::size_t expected = std::size_t{1} << k;
  if (interval_size(x, y) != expected) return -1;

  std::vector<std::uint32_t> atoms;
  for (std::uint32_t c : covers_[x])
    if (leq(c, y)) atoms.push_back(c);
  if (static_cast<int>(atoms.size()) != k) return -1;

  std::vector<std::uint32_t> element_of_mask(expected, UINT32_MAX);
  const std::uint64_t* a = up_.data() + x * words_;
  const std::uint64_t* b = down_.data() + y * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = a[w] & b[w];
    while (bits) {
      const std::size_t z = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < atoms.size(); ++j)
        if (leq(atoms[j], z)) mask |= 1u << j;
      if (std::popcount(mask) != length_[z] - length_[x]) return -1;
      if (element_of_mask[mask] != UINT32_MAX) return -1;
      element_of_mask[mask] = static_cast<std::uint32_t>(z);
    }
  }
  for (std::uint32_t s1 = 0; s1 < expected; ++s1) {
    const std::size_t z1 = element_of_mask[s1];
    for (std::uint32_t s2 = 0; s2 < expected; ++s2) {
      if (((s1 & ~s2) == 0) != leq(z1, element_of_mask[s2])) return -1;
    }
  }
  return k;
}

}  // namespace bruhatcube
