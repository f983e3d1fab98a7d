#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bruhatcube/bruhat.hpp"

namespace bruhatcube {

/// A Bruhat graph with one point per vertex (row i of `coordinates` is vertex i).
struct EmbeddedGraph {
  BruhatGraph graph;
  Eigen::MatrixXd coordinates;
  Eigen::VectorXd rho;
};

/// u -> u(rho), rho = (0, 1, ..., n-1), acting by permuting coordinates: the
/// i-th coordinate of the image is rho(u^{-1}(i)).
EmbeddedGraph geometric_embedding(const IntervalPoset& iv);

/// Intersections u W' with the vertex set, for every rank-two reflection
/// subgroup W' (two commuting transpositions, or the S_3 on three letters),
/// keeping those with at least two elements. Each subset is a sorted list of
/// vertex indices; the list itself is sorted and free of duplicates.
std::vector<std::vector<int>> rank2_cosets(const std::vector<Permutation>& vertices);
std::vector<std::vector<int>> rank2_cosets(const IntervalPoset& iv);

/// Good-embedding predicate: vertex images equidistant from a center in their affine
/// hull, and every rank-two coset subset of size >= 4 affinely planar. Both tests
/// are relative to the scale of the point set.
bool check_good_embedding(const EmbeddedGraph& eg, double tol);

}  // namespace bruhatcube
