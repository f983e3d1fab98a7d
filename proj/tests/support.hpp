#pragma once

// Independent reference implementations used to check the library. None of
// these call into the code under test except for the Permutation value type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "bruhatcube/permutation.hpp"

namespace testsupport {

using bruhatcube::Permutation;

// SplitMix64; fixed seeds make every property test reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

inline Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(image[static_cast<std::size_t>(i)], image[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return Permutation(image);
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

inline std::vector<int> images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

// Quadratic inversion count.
inline int inversions(const Permutation& p) {
  int count = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p(i) > p(j)) ++count;
  return count;
}

// Right multiplication by the transposition of positions a and b, on raw arrays.
inline Permutation times_transposition(const Permutation& p, int a, int b) {
  std::vector<int> image = images(p);
  std::swap(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
  return Permutation(image);
}

// x <= y iff y is reachable from x by right multiplications with transpositions,
// each increasing the inversion count.
inline bool chain_leq(const Permutation& x, const Permutation& y) {
  const int target = inversions(y);
  std::set<Permutation> seen{x};
  std::vector<Permutation> stack{x};
  while (!stack.empty()) {
    Permutation z = stack.back();
    stack.pop_back();
    if (z == y) return true;
    for (int a = 0; a < z.size(); ++a)
      for (int b = a + 1; b < z.size(); ++b) {
        if (z(a) > z(b)) continue;
        Permutation w = times_transposition(z, a, b);
        if (inversions(w) > target) continue;
        if (seen.insert(w).second) stack.push_back(std::move(w));
      }
  }
  return false;
}

// Upward closure of x under length-increasing transposition moves; the set of y >= x.
inline std::set<Permutation> chain_up_set(const Permutation& x) {
  std::set<Permutation> seen{x};
  std::vector<Permutation> stack{x};
  while (!stack.empty()) {
    Permutation z = stack.back();
    stack.pop_back();
    for (int a = 0; a < z.size(); ++a)
      for (int b = a + 1; b < z.size(); ++b) {
        if (z(a) > z(b)) continue;
        Permutation w = times_transposition(z, a, b);
        if (seen.insert(w).second) stack.push_back(std::move(w));
      }
  }
  return seen;
}

using Poly = std::vector<std::int64_t>;  // lowest degree first, no trailing zeros

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(out);
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

// (q - 1)^k by the binomial theorem.
inline Poly q_minus_one_power(int k) {
  Poly out(static_cast<std::size_t>(k) + 1, 0);
  std::int64_t c = 1;
  for (int j = 0; j <= k; ++j) {
    out[static_cast<std::size_t>(j)] = ((k - j) % 2 == 0 ? 1 : -1) * c;
    c = c * (k - j) / (j + 1);
  }
  return out;
}

// R-polynomials by the left-descent recursion: s y < y with s acting on values.
class LeftRecursionR {
 public:
  Poly operator()(const Permutation& x, const Permutation& y) {
    if (x == y) return {1};
    if (inversions(x) >= inversions(y) || !chain_leq_cached(x, y)) return {};
    auto key = std::make_pair(images(x), images(y));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Permutation yi = inverse_of(y);
    int s = 0;
    for (int i = 1; i < y.size(); ++i)
      if (yi(i - 1) > yi(i)) {
        s = i;
        break;
      }
    const Permutation sy = swap_values(y, s - 1, s);
    const Permutation sx = swap_values(x, s - 1, s);
    const Permutation xi = inverse_of(x);
    Poly r;
    if (xi(s - 1) > xi(s)) {
      r = (*this)(sx, sy);
    } else {
      Poly shifted = (*this)(sx, sy);
      shifted.insert(shifted.begin(), 0);
      r = add(trim(shifted), mul({-1, 1}, (*this)(x, sy)));
    }
    memo_[key] = r;
    return r;
  }

 private:
  static Permutation inverse_of(const Permutation& p) {
    std::vector<int> image(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) image[static_cast<std::size_t>(p(i))] = i;
    return Permutation(image);
  }
  static Permutation swap_values(const Permutation& p, int a, int b) {
    std::vector<int> image = images(p);
    for (int& v : image) {
      if (v == a)
        v = b;
      else if (v == b)
        v = a;
    }
    return Permutation(image);
  }
  bool chain_leq_cached(const Permutation& x, const Permutation& y) {
    auto& up = up_sets_[images(x)];
    if (up.empty()) up = chain_up_set(x);
    return up.count(y) != 0;
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, Poly> memo_;
  std::map<std::vector<int>, std::set<Permutation>> up_sets_;
};

// d from an R-polynomial: minus the coefficient just below the top degree.
inline std::int64_t d_of(const Poly& r, int length_difference) {
  if (length_difference == 0) return 0;
  const auto idx = static_cast<std::size_t>(length_difference - 1);
  return idx < r.size() ? -r[idx] : 0;
}

// Bit reversal of m-bit integers, written out directly.
inline Permutation bit_reversal(int m) {
  const int n = 1 << m;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int r = 0;
    for (int b = 0; b < m; ++b)
      if (i & (1 << b)) r |= 1 << (m - 1 - b);
    image[static_cast<std::size_t>(i)] = r;
  }
  return Permutation(image);
}

// Elementary-box test of the point set {(i, p(i))} in base t: for each split
// t^a x t^(m-a), every box holds exactly one point.
inline bool boxes_ok(const Permutation& p, int t, int m) {
  int n = 1;
  for (int i = 0; i < m; ++i) n *= t;
  for (int a = 0; a <= m; ++a) {
    int height = 1;
    for (int i = 0; i < a; ++i) height *= t;
    const int width = n / height;
    std::map<std::pair<int, int>, int> count;
    for (int i = 0; i < n; ++i) ++count[{i / width, p(i) / height}];
    if (static_cast<int>(count.size()) != n) return false;
  }
  return true;
}

}  // namespace testsupport
