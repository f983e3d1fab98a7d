#include <doctest.h>

#include <set>

#include "bruhatcube/bruhat.hpp"
#include "bruhatcube/dwd.hpp"
#include "bruhatcube/errors.hpp"
#include "support.hpp"

using namespace bruhatcube;
using testsupport::images;

TEST_CASE("complementary blocks") {
  CHECK(complementary_blocks(1).size() == 1);
  CHECK(complementary_blocks(2).size() == 4);
  CHECK(complementary_blocks(3).size() == 12);
  for (int m = 1; m <= 6; ++m) {
    const auto blocks = complementary_blocks(m);
    CHECK(blocks.size() == (static_cast<std::size_t>(m) << (m - 1)));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& b = blocks[i];
      CHECK(b.domain.level + b.range.level == m + 1);
      CHECK(b.domain.level >= 1);
      CHECK(b.range.level >= 1);
      CHECK(block_position(m, b) == i);
      if (i > 0) {
        const auto& a = blocks[i - 1];
        CHECK(std::tuple(a.domain.level, a.domain.index, a.range.index) <
              std::tuple(b.domain.level, b.domain.index, b.range.index));
      }
    }
  }
  CHECK_THROWS_AS(block_position(2, ComplementaryBlock{{1, 0}, {1, 0}}), InputError);
  CHECK_THROWS_AS(block_position(2, ComplementaryBlock{{1, 2}, {2, 0}}), InputError);
}

TEST_CASE("basic intervals") {
  const BasicInterval b{2, 3};
  CHECK(b.first() == 12);
  CHECK(b.last() == 15);
  CHECK(b.contains(13));
  CHECK_FALSE(b.contains(11));
}

TEST_CASE("cube coordinates") {
  const CubeCoordinates c = parse_cube_coordinates(2, "0110");
  CHECK(to_string(c) == "0110");
  CHECK(c.weight() == 2);
  CHECK(c[1]);
  CHECK_FALSE(c[0]);
  CHECK(CubeCoordinates::from_integer(2, 0b0110) == c);
  CHECK(c.subset_of(CubeCoordinates::all_ones(2)));
  CHECK_FALSE(CubeCoordinates::all_ones(2).subset_of(c));
  CHECK(CubeCoordinates(2).subset_of(c));
  CHECK_THROWS_AS(parse_cube_coordinates(2, "011"), InputError);
  CHECK_THROWS_AS(parse_cube_coordinates(2, "01a0"), InputError);
  CubeCoordinates d = c;
  d.toggle(0);
  CHECK(to_string(d) == "1110");
}

TEST_CASE("is_dwd examples") {
  CHECK(is_dwd(gen_x(4)));
  CHECK(is_dwd(gen_y(4)));
  CHECK(is_dwd(Permutation({0, 1})));
  CHECK(is_dwd(Permutation({1, 0})));
  CHECK_FALSE(is_dwd(Permutation::identity(4)));
  CHECK(is_dwd(Permutation::identity(1)));
  CHECK_THROWS_AS(is_dwd(Permutation::identity(3)), InputError);
  CHECK_THROWS_AS(is_dwd(Permutation::identity(6)), InputError);
}

TEST_CASE("is_dwd agrees with the elementary-box test on S_4 and S_8") {
  for (int m = 2; m <= 3; ++m) {
    std::size_t count = 0;
    for (const auto& p : testsupport::all_permutations(1 << m)) {
      const bool ok = is_dwd(p);
      CHECK(ok == testsupport::boxes_ok(p, 2, m));
      if (ok) ++count;
    }
    CHECK(count == (std::size_t{1} << (m << (m - 1))));
  }
}

TEST_CASE("bit-reversal pair") {
  CHECK(gen_x(2) == Permutation({0, 2, 1, 3}));
  CHECK(gen_y(2) == Permutation({3, 1, 2, 0}));
  CHECK(images(gen_x(4)) == std::vector<int>{0, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15});
  CHECK(images(gen_y(4)) == std::vector<int>{15, 7, 11, 3, 13, 5, 9, 1, 14, 6, 10, 2, 12, 4, 8, 0});
  for (int m = 1; m <= 10; ++m) {
    const Permutation x = gen_x(m), y = gen_y(m);
    const int n = 1 << m;
    CHECK(x == testsupport::bit_reversal(m));
    for (int i = 0; i < n; ++i) CHECK(y(i) == n - 1 - x(i));
    CHECK(inverse(x) == x);
    CHECK(inverse(y) == y);
    CHECK(compose(x, y) == longest_element(n));
    CHECK(compose(y, x) == longest_element(n));
    CHECK(length(y) - length(x) == (std::int64_t{m} << (m - 1)));
    if (m >= 2) {
      const std::int64_t quarter = std::int64_t{1} << (m - 2);
      CHECK(length(x) == quarter * (n - (m + 1)));
      CHECK(length(y) == quarter * (n + (m - 1)));
    }
  }
  CHECK(length(gen_x(1)) == 0);
  CHECK(length(gen_y(1)) == 1);
}

TEST_CASE("phi at the extremes and the decoder") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(encode_phi(gen_x(m)) == CubeCoordinates(m));
    CHECK(encode_phi(gen_y(m)) == CubeCoordinates::all_ones(m));
    CHECK(decode_phi(CubeCoordinates(m)) == gen_x(m));
    CHECK(decode_phi(CubeCoordinates::all_ones(m)) == gen_y(m));
  }
  for (int m = 4; m <= 6; ++m) {
    CHECK(decode_phi(CubeCoordinates(m)) == gen_x(m));
    CHECK(decode_phi(CubeCoordinates::all_ones(m)) == gen_y(m));
  }
  for (std::uint64_t v = 0; v < 4096; ++v) {
    const CubeCoordinates c = CubeCoordinates::from_integer(3, v);
    CHECK(encode_phi(decode_phi(c)) == c);
  }
  CHECK_THROWS_AS(encode_phi(Permutation::identity(4)), DomainError);
}

TEST_CASE("flip examples") {
  const auto blocks = complementary_blocks(2);
  const ComplementaryBlock first{{1, 0}, {2, 0}};
  REQUIRE(blocks[0] == first);
  const Permutation f = flip(gen_x(2), first);
  CHECK(f == Permutation({2, 0, 1, 3}));
  CHECK(length(f) == 2);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    CubeCoordinates chi(2);
    chi.set(b, true);
    CHECK(encode_phi(flip(gen_x(2), blocks[b])) == chi);
    CHECK(length(flip(gen_y(2), blocks[b])) == 4);
  }
  for (const auto& p : enumerate_dwd(2))
    for (const auto& b : blocks) CHECK(flip(flip(p, b), b) == p);
  CHECK_THROWS_AS(flip(Permutation::identity(4), first), DomainError);
}

TEST_CASE("flips on all of DWD_3") {
  const auto blocks = complementary_blocks(3);
  std::size_t cases = 0;
  for_each_dwd(3, [&](const CubeCoordinates& c, const Permutation& p) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Permutation f = flip(p, blocks[b]);
      CubeCoordinates expected = c;
      expected.toggle(b);
      REQUIRE(is_dwd(f));
      REQUIRE(encode_phi(f) == expected);
      REQUIRE(length(f) - length(p) == (c[b] ? -1 : 1));
      ++cases;
    }
  });
  CHECK(cases == 49152);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_dwd(1).size() == 2);
  for (int m = 2; m <= 3; ++m) {
    const auto all = enumerate_dwd(m);
    CHECK(all.size() == (std::size_t{1} << (m << (m - 1))));
    const std::set<Permutation> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& p : all) CHECK(is_dwd(p));
  }
  const auto fig = enumerate_dwd(2);
  const IntervalPoset iv = interval(gen_x(2), gen_y(2));
  CHECK(std::set<Permutation>(fig.begin(), fig.end()) == std::set<Permutation>(iv.elements.begin(), iv.elements.end()));
  CHECK_THROWS_AS(enumerate_dwd(4), SizeLimitError);
}

TEST_CASE("interval elements are dwd") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& p : interval(gen_x(m), gen_y(m)).elements) CHECK(is_dwd(p));
}

TEST_CASE("phi is an order isomorphism on DWD_2") {
  std::vector<CubeCoordinates> coords;
  std::vector<Permutation> perms;
  for_each_dwd(2, [&](const CubeCoordinates& c, const Permutation& p) {
    coords.push_back(c);
    perms.push_back(p);
  });
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j)
      CHECK(bruhat_leq(perms[i], perms[j]) == coords[i].subset_of(coords[j]));
}

TEST_CASE("seeded sampling") {
  const auto a = sample_dwd(4, 50, 7);
  const auto b = sample_dwd(4, 50, 7);
  CHECK(a == b);
  CHECK(sample_dwd(4, 50, 8) != a);
  for (const auto& p : a) CHECK(is_dwd(p));
}
