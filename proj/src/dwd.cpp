#include "bruhatcube/dwd.hpp"

#include <random>

#include "bruhatcube/errors.hpp"

namespace bruhatcube {

namespace {

constexpr int kFullEnumerationRank = 24;

std::size_t cube_rank(int m) { return static_cast<std::size_t>(m) << (m - 1); }

void require_m(int m) {
  if (m < 1 || m > 20) throw InputError("m must be in 1..20");
}

}  // namespace

std::vector<ComplementaryBlock> complementary_blocks(int m) {
  require_m(m);
  std::vector<ComplementaryBlock> blocks;
  blocks.reserve(cube_rank(m));
  for (int k1 = 1; k1 <= m; ++k1) {
    const int k2 = m + 1 - k1;
    for (std::int64_t s = 0; s < (std::int64_t{1} << (m - k1)); ++s)
      for (std::int64_t t = 0; t < (std::int64_t{1} << (m - k2)); ++t)
        blocks.push_back({{k1, s}, {k2, t}});
  }
  return blocks;
}

std::size_t block_position(int m, const ComplementaryBlock& b) {
  const int k1 = b.domain.level;
  if (k1 < 1 || k1 > m || b.range.level != m + 1 - k1 || b.domain.index < 0 ||
      b.domain.index >= (std::int64_t{1} << (m - k1)) || b.range.index < 0 ||
      b.range.index >= (std::int64_t{1} << (k1 - 1)))
    throw InputError("not a complementary block for m = " + std::to_string(m));
  return (static_cast<std::size_t>(k1 - 1) << (m - 1)) +
         (static_cast<std::size_t>(b.domain.index) << (k1 - 1)) +
         static_cast<std::size_t>(b.range.index);
}

CubeCoordinates::CubeCoordinates(int m) : m_(m) {
  require_m(m);
  bits_.assign(cube_rank(m), 0);
}

CubeCoordinates::CubeCoordinates(int m, std::vector<std::uint8_t> bits) : m_(m), bits_(std::move(bits)) {
  require_m(m);
  if (bits_.size() != cube_rank(m))
    throw InputError("cube coordinates for m = " + std::to_string(m) + " need " +
                     std::to_string(cube_rank(m)) + " bits");
  for (auto& b : bits_)
    if (b > 1) throw InputError("cube coordinate bits must be 0 or 1");
}

CubeCoordinates CubeCoordinates::all_ones(int m) {
  CubeCoordinates c(m);
  for (auto& b : c.bits_) b = 1;
  return c;
}

CubeCoordinates CubeCoordinates::from_integer(int m, std::uint64_t value) {
  CubeCoordinates c(m);
  if (c.rank() > 64) throw InputError("from_integer supports at most 64 coordinates");
  for (std::size_t i = 0; i < c.rank(); ++i) c.bits_[i] = static_cast<std::uint8_t>((value >> i) & 1u);
  return c;
}

std::size_t CubeCoordinates::weight() const {
  std::size_t w = 0;
  for (auto b : bits_) w += b;
  return w;
}

bool CubeCoordinates::subset_of(const CubeCoordinates& other) const {
  if (other.m_ != m_) throw InputError("cube coordinate size mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] > other.bits_[i]) return false;
  return true;
}

std::string to_string(const CubeCoordinates& c) {
  std::string s;
  s.reserve(c.rank());
  for (auto b : c.bits()) s += b ? '1' : '0';
  return s;
}

CubeCoordinates parse_cube_coordinates(int m, std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1')
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    else if (ch != ' ' && ch != '\n' && ch != '\t')
      throw InputError(std::string("invalid token '") + ch + "' in cube coordinates");
  }
  return CubeCoordinates(m, std::move(bits));
}

int log2_exact(std::int64_t n) {
  if (n < 1 || (n & (n - 1)) != 0) return -1;
  int m = 0;
  while ((std::int64_t{1} << m) < n) ++m;
  return m;
}

bool is_dwd(const Permutation& p) {
  const int m = log2_exact(p.size());
  if (m < 0) throw InputError("is_dwd: degree " + std::to_string(p.size()) + " is not a power of two");
  // Levels 0 and m hold for every permutation.
  std::vector<int> hits;
  for (int k1 = 1; k1 < m; ++k1) {
    const int k2 = m - k1;
    const std::int64_t domain_size = std::int64_t{1} << k1;
    const std::int64_t ranges = std::int64_t{1} << (m - k2);
    for (std::int64_t s = 0; s < (std::int64_t{1} << (m - k1)); ++s) {
      // How many i in S land in each basic k2-interval T.
      hits.assign(static_cast<std::size_t>(ranges), 0);
      for (std::int64_t i = s * domain_size; i < (s + 1) * domain_size; ++i)
        ++hits[static_cast<std::size_t>(p(static_cast<int>(i)) >> k2)];
      for (int h : hits)
        if (h != 1) return false;
    }
  }
  return true;
}

Permutation gen_x(int m) {
  require_m(m);
  const int n = 1 << m;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int r = 0;
    for (int b = 0; b < m; ++b) r |= ((i >> b) & 1) << (m - 1 - b);
    image[static_cast<std::size_t>(i)] = r;
  }
  return Permutation(std::move(image));
}

Permutation gen_y(int m) {
  require_m(m);
  Permutation x = gen_x(m);
  const int n = 1 << m;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = n - 1 - x(i);
  return Permutation(std::move(image));
}

CubeCoordinates encode_phi(const Permutation& p) {
  if (!is_dwd(p)) throw DomainError("encode_phi requires a dwd permutation");
  const int m = log2_exact(p.size());
  if (m < 1) throw InputError("encode_phi requires degree >= 2");
  CubeCoordinates c(m);
  // Each point j lies in exactly one block per domain level k1; the point from the
  // lower half of the domain interval fixes the block's pattern.
  for (int j = 0; j < p.size(); ++j) {
    for (int k1 = 1; k1 <= m; ++k1) {
      if ((j >> (k1 - 1)) & 1) continue;
      const int k2 = m + 1 - k1;
      const int v = p(j);
      ComplementaryBlock b{{k1, j >> k1}, {k2, v >> k2}};
      c.set(block_position(m, b), (v >> (k2 - 1)) & 1);
    }
  }
  return c;
}

Permutation decode_phi(const CubeCoordinates& c) {
  const int m = c.m();
  const int n = 1 << m;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::int64_t prefix = 0;
    for (int k1 = 1; k1 <= m; ++k1) {
      const int k2 = m + 1 - k1;
      const int half = (j >> (k1 - 1)) & 1;
      const bool reversed = c[block_position(m, {{k1, j >> k1}, {k2, prefix}})];
      prefix = (prefix << 1) | (half ^ static_cast<int>(reversed));
    }
    image[static_cast<std::size_t>(j)] = static_cast<int>(prefix);
  }
  return Permutation(std::move(image));
}

Permutation flip(const Permutation& p, const ComplementaryBlock& block) {
  if (!is_dwd(p)) throw DomainError("flip requires a dwd permutation");
  const int m = log2_exact(p.size());
  block_position(m, block);  // validates
  int first = -1, second = -1;
  for (std::int64_t i = block.domain.first(); i <= block.domain.last(); ++i) {
    if (!block.range.contains(p(static_cast<int>(i)))) continue;
    (first < 0 ? first : second) = static_cast<int>(i);
  }
  return p.swap_positions(first, second);
}

void for_each_dwd(int m, const std::function<void(const CubeCoordinates&, const Permutation&)>& visit,
                  bool force) {
  require_m(m);
  const std::size_t rank = cube_rank(m);
  if (rank > kFullEnumerationRank && !force)
    throw SizeLimitError("full dwd enumeration refused for m = " + std::to_string(m) + " (2^" +
                         std::to_string(rank) + " elements)");
  if (rank >= 64) throw SizeLimitError("dwd enumeration beyond 2^63 elements is impossible");
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << rank); ++v) {
    CubeCoordinates c = CubeCoordinates::from_integer(m, v);
    visit(c, decode_phi(c));
  }
}

std::vector<Permutation> enumerate_dwd(int m, bool force) {
  std::vector<Permutation> out;
  for_each_dwd(m, [&](const CubeCoordinates&, const Permutation& p) { out.push_back(p); }, force);
  return out;
}

std::vector<Permutation> sample_dwd(int m, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    CubeCoordinates c(m);
    for (std::size_t i = 0; i < c.rank(); ++i) c.set(i, rng() & 1u);
    out.push_back(decode_phi(c));
  }
  return out;
}

}  // namespace bruhatcube
