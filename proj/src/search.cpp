#include "bruhatcube/search.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "bruhatcube/bruhat.hpp"
#include "bruhatcube/dwd.hpp"
#include "bruhatcube/errors.hpp"
#include "bruhatcube/group_table.hpp"
#include "bruhatcube/kl.hpp"
#include "bruhatcube/parallel.hpp"

namespace bruhatcube {
namespace {

constexpr int kExactCensusMax = 7;
constexpr std::size_t kMaxReportedFailures = 10;

void check_exact_size(int n, bool force, const char* what) {
  if (n < 1) throw InputError(std::string(what) + ": n must be positive");
  if (n > kExactCensusMax && !force)
    throw SizeLimitError(std::string(what) + " refused for n = " + std::to_string(n) + " (limit " +
                         std::to_string(kExactCensusMax) + ", use force)");
}

// Python's list(range(start, stop, step)) for step > 0.
std::vector<int> py_range(int start, int stop, int step) {
  std::vector<int> out;
  for (int i = start; i < stop; i += step) out.push_back(i);
  return out;
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<CensusRow> interval_census(int n, int k_min, int k_max, unsigned threads, bool force) {
  check_exact_size(n, force, "census");
  const int top = n * (n - 1) / 2;
  if (k_min < 0 || k_max < k_min) throw InputError("census: need 0 <= k_min <= k_max");
  k_max = std::min(k_max, top);
  const std::size_t width = k_min <= k_max ? static_cast<std::size_t>(k_max - k_min + 1) : 0;

  const SymmetricGroupTable table(n);
  const std::size_t size = table.size();
  std::vector<std::int64_t> totals(size * width, 0);
  std::vector<std::int64_t> cubes(size * width, 0);

  parallel_for(size, threads, [&](std::size_t x) {
    const auto up = table.up_set(x);
    const int lx = table.length(x);
    for (std::size_t w = 0; w < up.size(); ++w) {
      for (std::uint64_t bits = up[w]; bits != 0; bits &= bits - 1) {
        const std::size_t y = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const int k = table.length(y) - lx;
        if (k < k_min || k > k_max) continue;
        const std::size_t slot = x * width + static_cast<std::size_t>(k - k_min);
        ++totals[slot];
        if (k < 63 && table.interval_size(x, y) == (std::size_t{1} << k) && table.boolean_rank(x, y) == k)
          ++cubes[slot];
      }
    }
  });

  std::vector<CensusRow> rows;
  for (std::size_t c = 0; c < width; ++c) {
    CensusRow row;
    row.k = k_min + static_cast<int>(c);
    for (std::size_t x = 0; x < size; ++x) {
      row.total += totals[x * width + c];
      row.hypercubes += cubes[x * width + c];
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<CensusRow> interval_census(int n, unsigned threads, bool force) {
  return interval_census(n, 1, std::max(1, n * (n - 1) / 2), threads, force);
}

MaxDResult max_d(int n, unsigned threads, bool force) {
  check_exact_size(n, force, "max_d");
  const SymmetricGroupTable table(n);
  const std::size_t size = table.size();
  std::vector<int> best(size, -1);
  std::vector<std::size_t> witness(size, 0);

  parallel_for(size, threads, [&](std::size_t x) {
    const auto up = table.up_set(x);
    const int lx = table.length(x);
    int local = -1;
    std::size_t arg = x;
    for (std::size_t w = 0; w < up.size(); ++w) {
      for (std::uint64_t bits = up[w]; bits != 0; bits &= bits - 1) {
        const std::size_t y = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (table.length(y) - lx <= local) continue;  // d <= l(y) - l(x)
        const int d = table.d_invariant(x, y);
        if (d > local) {
          local = d;
          arg = y;
        }
      }
    }
    best[x] = local;
    witness[x] = arg;
  });

  std::size_t arg = 0;
  for (std::size_t x = 1; x < size; ++x)
    if (best[x] > best[arg]) arg = x;
  return MaxDResult{n, best[arg], table.element(arg), table.element(witness[arg])};
}

GeneratedPair funsearch_pair(int n, GeneratorProgram program) {
  if (n < 5) throw InputError("generator programs need n >= 5");
  if (program == GeneratorProgram::start3 && n < 8) throw InputError("the start-3 program needs n >= 8");
  const std::vector<int> a = concat(reversed(py_range(1, n - 1, 2)), reversed(py_range(2, n - 1, 2)));
  std::vector<int> b;
  switch (program) {
    case GeneratorProgram::first:
      b = concat(py_range(0, n - 2, 2), reversed(py_range(n / 3, n - 1, 2)));
      break;
    case GeneratorProgram::second:
      b = concat(py_range(0, n - 1, 2), reversed(py_range(n / 4, n - 1, 2)));
      break;
    case GeneratorProgram::start3:
      b = concat(py_range(0, n - 2, 2), reversed(py_range(3, n - 1, 2)));
      break;
  }
  GeneratedPair out;
  auto keep = [&](const std::vector<int>& letters) {
    Word w;
    for (int l : letters) {
      if (l >= 1 && l <= n - 1)
        w.push_back(l);
      else
        out.dropped.push_back(l);
    }
    return w;
  };
  out.a = keep(a);
  out.b = keep(b);
  out.x = from_word(n, out.a);
  out.y = from_word(n, out.b);
  return out;
}

GeneratedPair funsearch_pair_start3(int n) { return funsearch_pair(n, GeneratorProgram::start3); }

std::pair<Permutation, Permutation> baseline_n12() {
  return {from_cycles(12, parse_transpositions("(2,5)(4,7)(6,9)(8,11)")),
          from_cycles(12, parse_transpositions("(1,12)(2,4)(3,6)(5,8)(7,10)(9,11)"))};
}

namespace {

std::int64_t pair_score(const Permutation& x, const Permutation& y) {
  return bruhat_leq(x, y) ? d_invariant(x, y) : -1;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

// A comparable pair: two random permutations ordered if possible, otherwise the
// identity under the second.
std::pair<Permutation, Permutation> random_pair(int n, std::mt19937_64& rng) {
  Permutation x = random_permutation(n, rng);
  Permutation y = random_permutation(n, rng);
  if (bruhat_leq(x, y)) return {x, y};
  if (bruhat_leq(y, x)) return {y, x};
  return {Permutation::identity(n), y};
}

struct Move {
  bool on_y;
  bool left;
  int a;
  int b;
};

SearchState climb(Permutation x, Permutation y, std::mt19937_64& rng, std::uint64_t seed,
                  std::uint64_t budget) {
  const int n = x.size();
  SearchState best;
  best.seed = seed;
  best.budget = budget;
  best.score = pair_score(x, y);
  best.initial_score = best.score;
  best.x = x;
  best.y = y;
  std::int64_t score = best.score;

  std::vector<Move> moves;
  for (int side = 0; side < 4; ++side)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) moves.push_back(Move{side >= 2, (side & 1) != 0, a, b});

  std::uint64_t used = 0;
  while (used < budget && !moves.empty()) {
    std::shuffle(moves.begin(), moves.end(), rng);
    bool improved = false;
    for (const Move& mv : moves) {
      if (used >= budget) break;
      ++used;
      const Permutation& target = mv.on_y ? y : x;
      Permutation moved = mv.left ? target.swap_values(mv.a, mv.b) : target.swap_positions(mv.a, mv.b);
      const std::int64_t s = mv.on_y ? pair_score(x, moved) : pair_score(moved, y);
      if (s > score) {
        (mv.on_y ? y : x) = std::move(moved);
        score = s;
        improved = true;
        break;
      }
    }
    if (score > best.score) {
      best.score = score;
      best.x = x;
      best.y = y;
    }
    if (!improved && used < budget) {
      std::tie(x, y) = random_pair(n, rng);
      score = pair_score(x, y);
      if (score > best.score) {
        best.score = score;
        best.x = x;
        best.y = y;
      }
    }
  }
  best.evaluations = used;
  return best;
}

}  // namespace

SearchState local_search_d(int n, std::uint64_t seed, std::uint64_t budget) {
  if (n < 1) throw InputError("local search: n must be positive");
  std::mt19937_64 rng(seed);
  auto [x, y] = random_pair(n, rng);
  return climb(std::move(x), std::move(y), rng, seed, budget);
}

SearchState local_search_d(const Permutation& x, const Permutation& y, std::uint64_t seed,
                           std::uint64_t budget) {
  if (x.size() != y.size()) throw InputError("local search: degree mismatch");
  std::mt19937_64 rng(seed);
  return climb(x, y, rng, seed, budget);
}

namespace {

std::uint64_t mask_of(const CubeCoordinates& c) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < c.rank(); ++i)
    if (c[i]) mask |= std::uint64_t{1} << i;
  return mask;
}

void note_failure(TheoremReport& r, const std::string& what) {
  if (r.failures.size() < kMaxReportedFailures) r.failures.push_back(what);
}

void verify_full(TheoremReport& r, unsigned threads) {
  const int m = r.m;
  const int n = 1 << m;
  const Permutation xm = gen_x(m);
  const Permutation ym = gen_y(m);
  const std::int64_t base = length(xm);

  std::vector<Permutation> brute;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  do {
    Permutation p(image);
    if (is_dwd(p)) brute.push_back(std::move(p));
  } while (std::next_permutation(image.begin(), image.end()));

  const IntervalPoset iv = interval(xm, ym);
  std::vector<Permutation> in_interval = iv.elements;
  std::sort(in_interval.begin(), in_interval.end());

  std::vector<CubeCoordinates> coords;
  std::vector<Permutation> decoded;
  for_each_dwd(m, [&](const CubeCoordinates& c, const Permutation& p) {
    coords.push_back(c);
    decoded.push_back(p);
  });
  std::vector<Permutation> image_set = decoded;
  std::sort(image_set.begin(), image_set.end());
  if (std::adjacent_find(image_set.begin(), image_set.end()) != image_set.end())
    note_failure(r, "phi^{-1} is not injective");

  r.elements = brute.size();
  if (brute != in_interval) note_failure(r, "brute-force dwd set differs from the interval");
  if (brute != image_set) note_failure(r, "brute-force dwd set differs from the decoded cube");
  if (brute.size() != (std::size_t{1} << r.rank)) note_failure(r, "dwd count is not 2^rank");

  const auto boolean = is_boolean_interval(iv);
  if (!boolean || static_cast<std::size_t>(*boolean) != r.rank)
    note_failure(r, "interval is not boolean of rank " + std::to_string(r.rank));

  std::vector<std::uint64_t> masks;
  std::vector<EhresmannMatrix> matrices;
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    masks.push_back(mask_of(coords[i]));
    matrices.push_back(ehresmann(decoded[i]));
    if (encode_phi(decoded[i]) != coords[i]) note_failure(r, "encode(decode(c)) != c for c = " + to_string(coords[i]));
    if (length(decoded[i]) != base + static_cast<std::int64_t>(coords[i].weight()))
      note_failure(r, "length is not l(x_m) + weight for c = " + to_string(coords[i]));
  }

  const std::size_t count = decoded.size();
  std::vector<std::size_t> comparable(count, 0);
  std::vector<std::size_t> bad(count, count);
  parallel_for(count, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < count; ++j) {
      const bool leq = entrywise_leq(matrices[i], matrices[j]);
      const bool subset = (masks[i] & ~masks[j]) == 0;
      if (leq) ++comparable[i];
      if (leq != subset && bad[i] == count) bad[i] = j;
    }
  });
  r.pairs_checked = count * count;
  for (std::size_t i = 0; i < count; ++i) {
    r.comparable_pairs += comparable[i];
    if (bad[i] != count)
      note_failure(r, "order mismatch: " + to_string(coords[i]) + " vs " + to_string(coords[bad[i]]));
  }
}

void verify_sampled(TheoremReport& r, std::size_t sample_size, std::uint64_t seed) {
  const int m = r.m;
  const Permutation xm = gen_x(m);
  const Permutation ym = gen_y(m);
  const std::int64_t base = length(xm);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);

  auto random_coords = [&] {
    CubeCoordinates c(m);
    for (std::size_t i = 0; i < c.rank(); ++i) c.set(i, coin(rng));
    return c;
  };

  for (std::size_t s = 0; s < sample_size; ++s) {
    const CubeCoordinates c1 = random_coords();
    CubeCoordinates c2 = random_coords();
    for (std::size_t i = 0; i < c2.rank(); ++i)
      if (c1[i]) c2.set(i, true);
    if (s % 2 == 1 && c1.weight() > 0) {
      // Remove one 1-bit of c1 from c2 so the pair is a near miss.
      std::vector<std::size_t> ones;
      for (std::size_t i = 0; i < c1.rank(); ++i)
        if (c1[i]) ones.push_back(i);
      c2.set(ones[std::uniform_int_distribution<std::size_t>(0, ones.size() - 1)(rng)], false);
    }
    const bool leq = bruhat_leq(decode_phi(c1), decode_phi(c2));
    if (leq) ++r.comparable_pairs;
    if (leq != c1.subset_of(c2)) note_failure(r, "order mismatch: " + to_string(c1) + " vs " + to_string(c2));
  }
  r.pairs_checked = sample_size;

  for (std::size_t s = 0; s < sample_size; ++s) {
    const CubeCoordinates c = random_coords();
    const Permutation z = decode_phi(c);
    if (!is_dwd(z)) note_failure(r, "decoded element is not dwd: " + to_string(c));
    if (!bruhat_leq(xm, z) || !bruhat_leq(z, ym)) note_failure(r, "decoded element outside [x_m, y_m]: " + to_string(c));
    if (length(z) != base + static_cast<std::int64_t>(c.weight()))
      note_failure(r, "length is not l(x_m) + weight for c = " + to_string(c));
  }
  r.elements = sample_size;
}

}  // namespace

TheoremReport verify_main_theorem(int m, VerifyMode mode, std::size_t sample_size, std::uint64_t seed,
                                  unsigned threads) {
  if (m < 1 || m > 10) throw InputError("verify: m must lie in 1..10");
  if (mode == VerifyMode::full && m > 3)
    throw SizeLimitError("full verification is limited to m <= 3; use sampled mode");
  TheoremReport r;
  r.m = m;
  r.mode = mode;
  r.rank = static_cast<std::size_t>(m) << (m - 1);
  if (mode == VerifyMode::full)
    verify_full(r, threads);
  else
    verify_sampled(r, sample_size, seed);
  r.passed = r.failures.empty();
  return r;
}

}  // namespace bruhatcube
