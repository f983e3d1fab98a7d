#include "bruhatcube/bruhat.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "bruhatcube/errors.hpp"

namespace bruhatcube {

EhresmannMatrix::EhresmannMatrix(const Permutation& w)
    : n_(w.size()), entries_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
  const auto n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (static_cast<std::size_t>(w(static_cast<int>(j))) >= i) ++count;
      entries_[i * n + j] = count;
    }
  }
}

bool entrywise_leq(const EhresmannMatrix& a, const EhresmannMatrix& b) {
  if (a.n_ != b.n_) throw InputError("degree mismatch in Bruhat comparison");
  // Branch-free per row; rows are short.
  const auto n = static_cast<std::size_t>(a.n_);
  const std::uint16_t* pa = a.entries_.data();
  const std::uint16_t* pb = b.entries_.data();
  for (std::size_t i = 0; i < n; ++i) {
    bool bad = false;
    for (std::size_t j = 0; j < n; ++j) bad |= pa[i * n + j] > pb[i * n + j];
    if (bad) return false;
  }
  return true;
}

EhresmannMatrix ehresmann(const Permutation& w) { return EhresmannMatrix(w); }

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw InputError("degree mismatch in Bruhat comparison");
  const int n = x.size();
  // Sweep columns j; cx[i] and cy[i] hold E_x(i, j) and E_y(i, j).
  std::vector<int> cx(static_cast<std::size_t>(n), 0), cy(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= x(j); ++i) ++cx[static_cast<std::size_t>(i)];
    for (int i = 0; i <= y(j); ++i) ++cy[static_cast<std::size_t>(i)];
    for (int i = 0; i < n; ++i)
      if (cx[static_cast<std::size_t>(i)] > cy[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::vector<Permutation> covers(const Permutation& x, const std::optional<Permutation>& ceiling) {
  const int n = x.size();
  std::vector<Permutation> result;
  for (int a = 0; a < n; ++a) {
    // Scan b to the right; (a, b) is a cover iff nothing between has a value strictly
    // between x(a) and x(b). Track the smallest value above x(a) seen so far.
    int lowest_above = n;
    for (int b = a + 1; b < n; ++b) {
      int v = x(b);
      if (v > x(a) && v < lowest_above) {
        Permutation y = x.swap_positions(a, b);
        if (!ceiling || bruhat_leq(y, *ceiling)) result.push_back(std::move(y));
        lowest_above = v;
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<int> IntervalPoset::index_of(const Permutation& p) const {
  auto it = index.find(p);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

IntervalPoset interval(const Permutation& x, const Permutation& y) {
  if (!bruhat_leq(x, y)) throw DomainError("empty interval: bottom is not below top");
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::vector<std::pair<Permutation, Permutation>> raw_edges;
  std::deque<Permutation> queue{x};
  while (!queue.empty()) {
    Permutation z = std::move(queue.front());
    queue.pop_front();
    for (Permutation& c : covers(z, y)) {
      raw_edges.emplace_back(z, c);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }

  const std::int64_t base = length(x);
  std::vector<std::pair<int, Permutation>> ranked;
  ranked.reserve(seen.size());
  for (const Permutation& z : seen) ranked.emplace_back(static_cast<int>(length(z) - base), z);
  std::sort(ranked.begin(), ranked.end());

  IntervalPoset iv{x, y, {}, {}, {}, {}};
  iv.elements.reserve(ranked.size());
  iv.rank.reserve(ranked.size());
  for (auto& [r, z] : ranked) {
    iv.index.emplace(z, static_cast<int>(iv.elements.size()));
    iv.rank.push_back(r);
    iv.elements.push_back(std::move(z));
  }
  iv.hasse_edges.reserve(raw_edges.size());
  for (const auto& [u, v] : raw_edges) iv.hasse_edges.emplace_back(iv.index.at(u), iv.index.at(v));
  std::sort(iv.hasse_edges.begin(), iv.hasse_edges.end());
  return iv;
}

std::optional<int> is_boolean_interval(const IntervalPoset& iv) {
  const int k = iv.length();
  const std::size_t size = iv.elements.size();
  if (k >= 63 || size != (std::size_t{1} << k)) return std::nullopt;

  std::vector<int> atoms;
  for (std::size_t i = 0; i < size; ++i)
    if (iv.rank[i] == 1) atoms.push_back(static_cast<int>(i));
  if (static_cast<int>(atoms.size()) != k) return std::nullopt;

  std::vector<EhresmannMatrix> ehr;
  ehr.reserve(size);
  for (const Permutation& z : iv.elements) ehr.emplace_back(z);

  // S(z) = atoms below z, as a bitmask over the atom list.
  std::vector<std::uint64_t> below(size, 0);
  std::vector<int> element_of_mask(size, -1);
  for (std::size_t z = 0; z < size; ++z) {
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (entrywise_leq(ehr[static_cast<std::size_t>(atoms[a])], ehr[z])) below[z] |= std::uint64_t{1} << a;
    if (std::popcount(below[z]) != iv.rank[z]) return std::nullopt;
    int& slot = element_of_mask[below[z]];
    if (slot != -1) return std::nullopt;
    slot = static_cast<int>(z);
  }
  for (std::size_t z1 = 0; z1 < size; ++z1) {
    for (std::size_t z2 = 0; z2 < size; ++z2) {
      bool subset = (below[z1] & ~below[z2]) == 0;
      if (subset != entrywise_leq(ehr[z1], ehr[z2])) return std::nullopt;
    }
  }
  return k;
}

std::optional<int> is_boolean_interval(const Permutation& x, const Permutation& y) {
  return is_boolean_interval(interval(x, y));
}

BruhatGraph bruhat_graph(const IntervalPoset& iv) {
  BruhatGraph g{iv.elements, {}};
  const int n = iv.bottom.size();
  std::vector<std::int64_t> len;
  len.reserve(iv.elements.size());
  for (const Permutation& z : iv.elements) len.push_back(length(z));
  for (std::size_t v = 0; v < iv.elements.size(); ++v) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        Permutation u = iv.elements[v].swap_values(a, b);
        auto ui = iv.index_of(u);
        if (ui && len[static_cast<std::size_t>(*ui)] < len[v])
          g.edges.push_back({*ui, static_cast<int>(v), {a, b}});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const BruhatEdge& l, const BruhatEdge& r) {
    return std::tie(l.from, l.to, l.label) < std::tie(r.from, r.to, r.label);
  });
  return g;
}

}  // namespace bruhatcube
