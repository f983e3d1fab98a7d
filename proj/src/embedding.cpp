#include "bruhatcube/embedding.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>

#include "bruhatcube/errors.hpp"

namespace bruhatcube {

EmbeddedGraph geometric_embedding(const IntervalPoset& iv) {
  const int n = iv.bottom.size();
  EmbeddedGraph eg{bruhat_graph(iv), Eigen::MatrixXd(static_cast<Eigen::Index>(iv.elements.size()), n),
                   Eigen::VectorXd::LinSpaced(n, 0.0, static_cast<double>(n - 1))};
  for (std::size_t v = 0; v < iv.elements.size(); ++v) {
    const Permutation& u = iv.elements[v];
    // coordinate u(j) receives rho(j)
    for (int j = 0; j < n; ++j) eg.coordinates(static_cast<Eigen::Index>(v), u(j)) = eg.rho(j);
  }
  return eg;
}

std::vector<std::vector<int>> rank2_cosets(const std::vector<Permutation>& vertices) {
  if (vertices.empty()) return {};
  const int n = vertices.front().size();
  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<int>(i));

  // Each subgroup is listed by its elements as permutations of positions.
  std::vector<std::vector<Permutation>> subgroups;
  const Permutation e = Permutation::identity(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::vector<Permutation> s3;
        std::vector<int> image(static_cast<std::size_t>(n));
        std::array<int, 3> letters{a, b, c}, arranged = letters;
        do {
          for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
          for (int k = 0; k < 3; ++k) image[static_cast<std::size_t>(letters[k])] = arranged[k];
          s3.emplace_back(image);
        } while (std::next_permutation(arranged.begin(), arranged.end()));
        subgroups.push_back(std::move(s3));
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = a + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (c == b || d == b) continue;
          const Permutation t1 = e.swap_positions(a, b);
          const Permutation t2 = e.swap_positions(c, d);
          subgroups.push_back({e, t1, t2, compose(t1, t2)});
        }

  std::set<std::vector<int>> found;
  for (const auto& group : subgroups) {
    for (const Permutation& u : vertices) {
      std::vector<int> members;
      for (const Permutation& w : group) {
        auto it = index.find(compose(u, w));
        if (it != index.end()) members.push_back(it->second);
      }
      if (members.size() < 2) continue;
      std::sort(members.begin(), members.end());
      found.insert(std::move(members));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> rank2_cosets(const IntervalPoset& iv) { return rank2_cosets(iv.elements); }

bool check_good_embedding(const EmbeddedGraph& eg, double tol) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  const Eigen::MatrixXd& pts = eg.coordinates;
  if (pts.rows() != static_cast<Eigen::Index>(eg.graph.vertices.size()))
    throw InputError("embedding must have one point per vertex");
  if (pts.rows() <= 1) return true;

  // Sphere center: the point of the affine hull equidistant from every vertex, i.e. the
  // minimum-norm least-squares solution of 2 (p_i - p_0) . c = |p_i|^2 - |p_0|^2.
  const Eigen::MatrixXd diffs = pts.bottomRows(pts.rows() - 1).rowwise() - pts.row(0);
  const Eigen::VectorXd rhs =
      pts.bottomRows(pts.rows() - 1).rowwise().squaredNorm().array() - pts.row(0).squaredNorm();
  const Eigen::VectorXd offset = (2.0 * diffs).completeOrthogonalDecomposition().solve(rhs - 2.0 * diffs * pts.row(0).transpose());
  const Eigen::RowVectorXd center = pts.row(0) + offset.transpose();
  const Eigen::VectorXd radius = (pts.rowwise() - center).rowwise().norm();
  const double scale = std::max(1.0, radius.maxCoeff());
  if (radius.maxCoeff() - radius.minCoeff() > tol * scale) return false;

  for (const auto& subset : rank2_cosets(eg.graph.vertices)) {
    if (subset.size() < 4) continue;
    Eigen::MatrixXd sub(static_cast<Eigen::Index>(subset.size()), pts.cols());
    for (std::size_t i = 0; i < subset.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = pts.row(subset[i]);
    const Eigen::MatrixXd centered = sub.rowwise() - sub.colwise().mean();
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(centered).singularValues();
    // Affine dimension <= 2: the third singular value vanishes.
    if (sv.size() >= 3 && sv(2) > tol * std::max(1.0, sv(0))) return false;
  }
  return true;
}

}  // namespace bruhatcube
