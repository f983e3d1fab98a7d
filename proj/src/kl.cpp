#include "bruhatcube/kl.hpp"

#include <array>
#include <bit>
#include <vector>

#include "bruhatcube/errors.hpp"

namespace bruhatcube {

std::optional<IntPolynomial> RPolynomialCache::find(const Permutation& x,
                                                    const Permutation& y) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find({x, y});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void RPolynomialCache::insert(const Permutation& x, const Permutation& y, const IntPolynomial& r) {
  std::unique_lock lock(mutex_);
  table_.try_emplace({x, y}, r);
}

std::size_t RPolynomialCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void RPolynomialCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

namespace {

constexpr int kMaxClosureEdges = 62;

int first_descent(const Permutation& y) {
  for (int i = 1; i < y.size(); ++i)
    if (has_right_descent(y, i)) return i;
  return 0;
}

IntPolynomial r_recursive(const Permutation& x, const Permutation& y, RPolynomialCache& cache) {
  if (x == y) return IntPolynomial::constant(1);
  if (length(x) >= length(y) || !bruhat_leq(x, y)) return {};
  if (auto hit = cache.find(x, y)) return *hit;

  const int i = first_descent(y);
  const Permutation ys = y.swap_positions(i - 1, i);
  const Permutation xs = x.swap_positions(i - 1, i);
  IntPolynomial r;
  if (has_right_descent(x, i)) {
    r = r_recursive(xs, ys, cache);
  } else {
    r = r_recursive(xs, ys, cache).shifted(1) +
        IntPolynomial({-1, 1}) * r_recursive(x, ys, cache);
  }
  cache.insert(x, y, r);
  return r;
}

}  // namespace

IntPolynomial r_polynomial(const Permutation& x, const Permutation& y) {
  RPolynomialCache cache;
  return r_polynomial(x, y, cache);
}

IntPolynomial r_polynomial(const Permutation& x, const Permutation& y, RPolynomialCache& cache) {
  if (x.size() != y.size()) throw InputError("degree mismatch in r_polynomial");
  return r_recursive(x, y, cache);
}

std::int64_t d_invariant(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw InputError("degree mismatch in d_invariant");
  if (!bruhat_leq(x, y)) throw DomainError("d_invariant requires x <= y");
  Permutation u = x;
  Permutation v = y;
  std::int64_t d = 0;
  while (u != v) {
    const int i = first_descent(v);
    Permutation vs = v.swap_positions(i - 1, i);
    Permutation us = u.swap_positions(i - 1, i);
    if (has_right_descent(u, i)) {
      u = std::move(us);
    } else if (!bruhat_leq(us, vs)) {
      ++d;
    }
    v = std::move(vs);
  }
  return d;
}

std::int64_t d_from_r(const Permutation& x, const Permutation& y) {
  if (!bruhat_leq(x, y)) throw DomainError("d_from_r requires x <= y");
  if (x == y) return 0;
  const IntPolynomial r = r_polynomial(x, y);
  return -r.coefficient(static_cast<int>(length(y) - length(x)) - 1);
}

int d_via_diamond_closure(const IntervalPoset& iv, int edge_cap) {
  const int edge_count = static_cast<int>(iv.hasse_edges.size());
  if (edge_count > edge_cap || edge_count > kMaxClosureEdges)
    throw SizeLimitError("diamond closure refused: " + std::to_string(edge_count) +
                         " Hasse edges exceeds cap " + std::to_string(std::min(edge_cap, kMaxClosureEdges)));
  if (edge_count == 0) return 0;

  const std::size_t size = iv.elements.size();
  std::vector<std::vector<std::pair<int, int>>> up(size);  // (upper vertex, edge id)
  for (int e = 0; e < edge_count; ++e) {
    auto [lo, hi] = iv.hasse_edges[static_cast<std::size_t>(e)];
    up[static_cast<std::size_t>(lo)].emplace_back(hi, e);
  }

  // A diamond is a length-two subinterval a < c1, c2 < b; edges ordered
  // (a c1), (a c2), (c1 b), (c2 b).
  std::vector<std::array<int, 4>> diamonds;
  for (std::size_t a = 0; a < size; ++a) {
    std::unordered_map<int, std::vector<std::pair<int, int>>> via;  // b -> (edge a-c, edge c-b)
    for (auto [c, e1] : up[a])
      for (auto [b, e2] : up[static_cast<std::size_t>(c)]) via[b].emplace_back(e1, e2);
    for (auto& [b, paths] : via) {
      if (paths.size() != 2) continue;
      diamonds.push_back({paths[0].first, paths[1].first, paths[0].second, paths[1].second});
    }
  }

  const std::uint64_t full = (std::uint64_t{1} << edge_count) - 1;
  auto closure = [&](std::uint64_t set) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& d : diamonds) {
        auto has = [&](int e) { return (set >> e) & 1u; };
        bool adjacent = (has(d[0]) && has(d[1])) || (has(d[2]) && has(d[3])) ||
                        (has(d[0]) && has(d[2])) || (has(d[1]) && has(d[3]));
        if (!adjacent) continue;
        const std::uint64_t all = (std::uint64_t{1} << d[0]) | (std::uint64_t{1} << d[1]) |
                                  (std::uint64_t{1} << d[2]) | (std::uint64_t{1} << d[3]);
        if ((set & all) != all) {
          set |= all;
          changed = true;
        }
      }
    }
    return set;
  };

  for (int size_f = 1; size_f <= edge_count; ++size_f) {
    // Gosper's hack over subsets of the given size.
    std::uint64_t subset = (std::uint64_t{1} << size_f) - 1;
    while (subset <= full) {
      if (closure(subset) == full) return size_f;
      const std::uint64_t c = subset & (~subset + 1);
      const std::uint64_t r = subset + c;
      if (r == 0) break;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  return edge_count;
}

std::int64_t reading_lower_bound(std::int64_t n) {
  if (n < 2) throw InputError("reading_lower_bound requires n >= 2");
  return n - 1 + (n - 2) / 2;
}

}  // namespace bruhatcube
