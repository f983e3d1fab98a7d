#include <doctest.h>

#include <cmath>

#include "bruhatcube/bruhat.hpp"
#include "bruhatcube/dwd.hpp"
#include "bruhatcube/embedding.hpp"
#include "bruhatcube/errors.hpp"
#include "bruhatcube/serialize.hpp"
#include "support.hpp"

using namespace bruhatcube;

namespace {

std::vector<IntervalPoset> all_intervals(int n) {
  std::vector<IntervalPoset> out;
  const auto perms = testsupport::all_permutations(n);
  for (const auto& x : perms)
    for (const auto& y : perms)
      if (bruhat_leq(x, y)) out.push_back(interval(x, y));
  return out;
}

}  // namespace

TEST_CASE("coordinates permute rho") {
  const IntervalPoset iv = interval(Permutation::identity(2), Permutation({1, 0}));
  const EmbeddedGraph eg = geometric_embedding(iv);
  REQUIRE(eg.coordinates.rows() == 2);
  CHECK(eg.coordinates(0, 0) == 0.0);
  CHECK(eg.coordinates(0, 1) == 1.0);
  CHECK(eg.coordinates(1, 0) == 1.0);
  CHECK(eg.coordinates(1, 1) == 0.0);

  // u(rho)_i = rho(u^{-1}(i)).
  const Permutation u({2, 0, 3, 1});
  const IntervalPoset single = interval(u, u);
  const EmbeddedGraph one = geometric_embedding(single);
  const Permutation ui = inverse(u);
  for (int i = 0; i < 4; ++i) CHECK(one.coordinates(0, i) == static_cast<double>(ui(i)));
}

TEST_CASE("embedding of the m = 2 cube is injective on a sphere") {
  const EmbeddedGraph eg = geometric_embedding(interval(gen_x(2), gen_y(2)));
  REQUIRE(eg.coordinates.rows() == 16);
  const double norm0 = eg.coordinates.row(0).norm();
  for (Eigen::Index i = 0; i < 16; ++i) {
    CHECK(std::abs(eg.coordinates.row(i).norm() - norm0) < 1e-12);
    for (Eigen::Index j = i + 1; j < 16; ++j) CHECK((eg.coordinates.row(i) - eg.coordinates.row(j)).norm() > 0.5);
  }
  CHECK(check_good_embedding(eg, 1e-9));
}

TEST_CASE("rank-two cosets") {
  const auto s3 = testsupport::all_permutations(3);
  const auto whole = rank2_cosets(s3);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == std::vector<int>{0, 1, 2, 3, 4, 5});

  // [e, s1 s3] in S_4 is a diamond: a single commuting-pair coset.
  const Permutation top = from_word(4, {1, 3});
  const IntervalPoset diamond = interval(Permutation::identity(4), top);
  REQUIRE(diamond.elements.size() == 4);
  bool found_square = false;
  for (const auto& c : rank2_cosets(diamond)) found_square = found_square || c.size() == 4;
  CHECK(found_square);

  // Subsets have at least two elements, are sorted and pairwise distinct.
  for (const auto& iv : all_intervals(4)) {
    if (iv.length() > 3) continue;
    const auto cosets = rank2_cosets(iv);
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      CHECK(cosets[i].size() >= 2);
      CHECK(cosets[i].size() <= 6);
      CHECK(std::is_sorted(cosets[i].begin(), cosets[i].end()));
      if (i > 0) CHECK(cosets[i - 1] < cosets[i]);
    }
  }
}

TEST_CASE("every interval in S_3 and S_4 embeds well") {
  int checked = 0;
  for (int n = 3; n <= 4; ++n)
    for (const auto& iv : all_intervals(n)) {
      CHECK(check_good_embedding(geometric_embedding(iv), 1e-9));
      ++checked;
    }
  CHECK(checked == 19 + 213);
}

TEST_CASE("displaced vertex breaks the sphere") {
  EmbeddedGraph eg = geometric_embedding(interval(Permutation::identity(3), longest_element(3)));
  eg.coordinates(2, 0) += 0.1;
  CHECK_FALSE(check_good_embedding(eg, 1e-9));
}

TEST_CASE("lifting a square out of its plane breaks planarity") {
  // Four points on a common sphere around the origin that are not coplanar:
  // the coset subset {e, t1, t2, t1 t2} of a diamond, with one point rotated.
  const Permutation top = from_word(4, {1, 3});
  EmbeddedGraph eg = geometric_embedding(interval(Permutation::identity(4), top));
  REQUIRE(check_good_embedding(eg, 1e-9));
  const Eigen::RowVectorXd original = eg.coordinates.row(3);
  eg.coordinates.row(3) = Eigen::RowVectorXd::Zero(4);
  eg.coordinates(3, 0) = original.norm();
  CHECK_FALSE(check_good_embedding(eg, 1e-9));
}

TEST_CASE("degenerate embeddings and bad tolerance") {
  const Permutation u({1, 0, 2});
  const EmbeddedGraph single = geometric_embedding(interval(u, u));
  CHECK(check_good_embedding(single, 1e-9));
  const EmbeddedGraph edge = geometric_embedding(interval(Permutation::identity(3), u));
  CHECK(check_good_embedding(edge, 1e-9));
  CHECK_THROWS_AS(check_good_embedding(edge, 0.0), InputError);
}

TEST_CASE("embedded graph json") {
  const IntervalPoset iv = interval(Permutation::identity(3), longest_element(3));
  const Json j = to_json(geometric_embedding(iv));
  REQUIRE(j.contains("vertices"));
  REQUIRE(j.contains("points"));
  REQUIRE(j.contains("edges"));
  CHECK(j["vertices"].size() == 6);
  CHECK(j["points"].size() == 6);
  CHECK(j["points"][0].size() == 3);
  CHECK(j["edges"].size() == 9);
  CHECK(j["edges"][0].size() == 3);
}
