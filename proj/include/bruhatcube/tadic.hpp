#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bruhatcube/permutation.hpp"

namespace bruhatcube {

/// t^m with overflow guard; throws InputError if t < 2, m < 1 or the result exceeds 2^30.
std::int64_t radix_power(int t, int m);

/// One S_t label per t-adic complementary block, canonical (k1, S, T) order.
/// labels[b](a) is the child of T reached from child a of S (0-indexed).
struct TCubeCoordinates {
  int t = 2;
  int m = 1;
  std::vector<Permutation> labels;
};

/// Labels printed 1-indexed, e.g. "[2,1,3] [1,3,2]".
std::string to_string(const TCubeCoordinates& c);

/// Tiles the permutation matrix into t^k x t^{m-k} blocks for 0 < k < m and
/// requires exactly one 1 in each. Throws InputError if p.size() != t^m.
bool is_dwd_t(const Permutation& p, int t, int m);

/// Base-t digit reversal, and its complement.
Permutation gen_x_t(int t, int m);
Permutation gen_y_t(int t, int m);

std::size_t t_block_count(int t, int m);
TCubeCoordinates encode_phi_t(const Permutation& p, int t, int m);
Permutation decode_phi_t(const TCubeCoordinates& c);

/// Brute force over S_{t^m}, split by first image across `threads` workers.
/// Refuses t^m > 9 unless force.
std::int64_t count_dwd_t(int t, int m, unsigned threads = 1, bool force = false);

/// Integer points (j, p(j)); consumers divide by t^m.
struct NetPointSet {
  int t = 2;
  int m = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
};

NetPointSet net_points(const Permutation& p, int t, int m);
/// Exactly one point in every elementary box of volume t^{-m}. Throws InputError
/// on a malformed point set (wrong size, coordinates out of range).
bool is_net(const NetPointSet& pts);

/// "# net t=<t> m=<m>" then "j p(j)" per line, ascending j.
void write_net(std::ostream& out, const NetPointSet& pts);
NetPointSet read_net(std::istream& in);

/// The double coset B x_m B inside S_{2^m}, B the unitriangular bit-linear maps
/// fixing every basic interval's prefix structure; with_translations extends both
/// sides to the affine group G = B x F_2^m. Refuses m > 4.
std::vector<Permutation> digital_net_coset(int m, bool with_translations = false);

/// t^m x t^m grid of symbols 1..t^m.
struct SudokuGrid {
  int t = 3;
  int m = 2;
  std::vector<std::vector<int>> cells;
};

SudokuGrid read_sudoku(std::istream& in, int t, int m);

/// sigma_v(row) = column of symbol v in that row; valid iff every sigma_v is a
/// t-adically well-distributed permutation and sigma_v sigma_w^{-1} is
/// fixed-point-free for v != w. Throws InputError if a row is not a bijection.
bool validate_sudoku(const SudokuGrid& g);
/// positions[v-1][row] = column of symbol v in row.
std::vector<std::vector<int>> sudoku_symbol_positions(const SudokuGrid& g);

}  // namespace bruhatcube
