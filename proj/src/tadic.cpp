#include "bruhatcube/tadic.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "bruhatcube/dwd.hpp"
#include "bruhatcube/errors.hpp"
#include "bruhatcube/parallel.hpp"

namespace bruhatcube {

std::int64_t radix_power(int t, int m) {
  if (t < 2) throw InputError("t must be >= 2");
  if (m < 1) throw InputError("m must be >= 1");
  std::int64_t r = 1;
  for (int i = 0; i < m; ++i) {
    r *= t;
    if (r > (std::int64_t{1} << 30)) throw InputError("t^m too large");
  }
  return r;
}

namespace {

std::int64_t ipow(std::int64_t t, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= t;
  return r;
}

void require_degree(const Permutation& p, int t, int m) {
  if (p.size() != radix_power(t, m))
    throw InputError("degree " + std::to_string(p.size()) + " is not t^m = " +
                     std::to_string(radix_power(t, m)));
}

}  // namespace

std::string to_string(const TCubeCoordinates& c) {
  std::string out;
  for (std::size_t b = 0; b < c.labels.size(); ++b) {
    if (b) out += ' ';
    out += '[';
    for (int a = 0; a < c.labels[b].size(); ++a) {
      if (a) out += ',';
      out += std::to_string(c.labels[b](a) + 1);
    }
    out += ']';
  }
  return out;
}

bool is_dwd_t(const Permutation& p, int t, int m) {
  require_degree(p, t, m);
  const std::int64_t n = p.size();
  std::vector<char> occupied(static_cast<std::size_t>(n));
  for (int k = 1; k < m; ++k) {
    // Tiles are t^k rows (values) by t^{m-k} columns (domain), t^m tiles in all.
    const std::int64_t tile_rows = ipow(t, k);
    const std::int64_t tile_cols = ipow(t, m - k);
    const std::int64_t tiles_across = n / tile_cols;
    std::fill(occupied.begin(), occupied.end(), 0);
    for (std::int64_t j = 0; j < n; ++j) {
      const std::int64_t tile = (p(static_cast<int>(j)) / tile_rows) * tiles_across + j / tile_cols;
      if (occupied[static_cast<std::size_t>(tile)]) return false;
      occupied[static_cast<std::size_t>(tile)] = 1;
    }
  }
  return true;
}

Permutation gen_x_t(int t, int m) {
  const std::int64_t n = radix_power(t, m);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t rest = i, reversed = 0;
    for (int d = 0; d < m; ++d) {
      reversed = reversed * t + rest % t;
      rest /= t;
    }
    image[static_cast<std::size_t>(i)] = static_cast<int>(reversed);
  }
  return Permutation(std::move(image));
}

Permutation gen_y_t(int t, int m) {
  const Permutation x = gen_x_t(t, m);
  std::vector<int> image(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) image[static_cast<std::size_t>(i)] = x.size() - 1 - x(i);
  return Permutation(std::move(image));
}

std::size_t t_block_count(int t, int m) {
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(radix_power(t, m) / t);
}

namespace {

std::size_t t_block_position(int t, int m, int k1, std::int64_t s, std::int64_t range_index) {
  return static_cast<std::size_t>((k1 - 1) * ipow(t, m - 1) + s * ipow(t, k1 - 1) + range_index);
}

}  // namespace

TCubeCoordinates encode_phi_t(const Permutation& p, int t, int m) {
  if (!is_dwd_t(p, t, m)) throw DomainError("encode_phi_t requires a t-adically well-distributed permutation");
  const std::size_t blocks = t_block_count(t, m);
  std::vector<std::vector<int>> label(blocks, std::vector<int>(static_cast<std::size_t>(t), -1));
  for (std::int64_t j = 0; j < p.size(); ++j) {
    const std::int64_t v = p(static_cast<int>(j));
    for (int k1 = 1; k1 <= m; ++k1) {
      const int k2 = m + 1 - k1;
      const std::int64_t child = (j / ipow(t, k1 - 1)) % t;
      const std::int64_t target = (v / ipow(t, k2 - 1)) % t;
      const std::size_t pos = t_block_position(t, m, k1, j / ipow(t, k1), v / ipow(t, k2));
      label[pos][static_cast<std::size_t>(child)] = static_cast<int>(target);
    }
  }
  TCubeCoordinates c{t, m, {}};
  c.labels.reserve(blocks);
  for (auto& l : label) c.labels.emplace_back(std::move(l));
  return c;
}

Permutation decode_phi_t(const TCubeCoordinates& c) {
  const int t = c.t, m = c.m;
  const std::int64_t n = radix_power(t, m);
  if (c.labels.size() != t_block_count(t, m))
    throw InputError("expected " + std::to_string(t_block_count(t, m)) + " block labels");
  for (const auto& l : c.labels)
    if (l.size() != t) throw InputError("block labels must have degree t");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    std::int64_t prefix = 0;
    for (int k1 = 1; k1 <= m; ++k1) {
      const int child = static_cast<int>((j / ipow(t, k1 - 1)) % t);
      const Permutation& label = c.labels[t_block_position(t, m, k1, j / ipow(t, k1), prefix)];
      prefix = prefix * t + label(child);
    }
    image[static_cast<std::size_t>(j)] = static_cast<int>(prefix);
  }
  return Permutation(std::move(image));
}

std::int64_t count_dwd_t(int t, int m, unsigned threads, bool force) {
  const std::int64_t n = radix_power(t, m);
  if (n > 9 && !force) throw SizeLimitError("brute-force dwd count refused for t^m = " + std::to_string(n) + " > 9");
  if (n > 12) throw SizeLimitError("brute-force dwd count beyond S_12 is not supported");
  std::vector<std::int64_t> partial(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t first) {
    std::vector<int> image;
    image.push_back(static_cast<int>(first));
    for (int v = 0; v < n; ++v)
      if (v != static_cast<int>(first)) image.push_back(v);
    std::int64_t count = 0;
    do {
      if (is_dwd_t(Permutation(image), t, m)) ++count;
    } while (std::next_permutation(image.begin() + 1, image.end()));
    partial[first] = count;
  });
  return std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
}

NetPointSet net_points(const Permutation& p, int t, int m) {
  require_degree(p, t, m);
  NetPointSet pts{t, m, {}};
  pts.points.reserve(static_cast<std::size_t>(p.size()));
  for (int j = 0; j < p.size(); ++j) pts.points.emplace_back(j, p(j));
  return pts;
}

bool is_net(const NetPointSet& pts) {
  const std::int64_t n = radix_power(pts.t, pts.m);
  if (static_cast<std::int64_t>(pts.points.size()) != n)
    throw InputError("net must have exactly t^m = " + std::to_string(n) + " points");
  for (auto [x, y] : pts.points)
    if (x < 0 || x >= n || y < 0 || y >= n) throw InputError("net point outside [0, t^m)");
  std::vector<char> occupied(static_cast<std::size_t>(n));
  // Elementary boxes t^{-a} wide and t^{-(m-a)} tall; a = 0 and a = m give the
  // one-point-per-row and one-point-per-column conditions.
  for (int a = 0; a <= pts.m; ++a) {
    const std::int64_t box_w = ipow(pts.t, pts.m - a);
    const std::int64_t box_h = ipow(pts.t, a);
    std::fill(occupied.begin(), occupied.end(), 0);
    for (auto [x, y] : pts.points) {
      const std::int64_t box = (x / box_w) * (n / box_h) + y / box_h;
      if (occupied[static_cast<std::size_t>(box)]) return false;
      occupied[static_cast<std::size_t>(box)] = 1;
    }
  }
  return true;
}

void write_net(std::ostream& out, const NetPointSet& pts) {
  auto sorted = pts.points;
  std::sort(sorted.begin(), sorted.end());
  out << "# net t=" << pts.t << " m=" << pts.m << '\n';
  for (auto [x, y] : sorted) out << x << ' ' << y << '\n';
}

NetPointSet read_net(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty net file");
  NetPointSet pts;
  {
    std::istringstream header(line);
    std::string hash, word, tf, mf;
    header >> hash >> word >> tf >> mf;
    if (hash != "#" || word != "net" || tf.rfind("t=", 0) != 0 || mf.rfind("m=", 0) != 0)
      throw InputError("net header must read '# net t=<t> m=<m>'");
    try {
      pts.t = std::stoi(tf.substr(2));
      pts.m = std::stoi(mf.substr(2));
    } catch (const std::exception&) {
      throw InputError("invalid t or m in net header");
    }
    radix_power(pts.t, pts.m);
  }
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::int64_t x = 0, y = 0;
    std::string extra;
    if (!(row >> x >> y) || (row >> extra))
      throw InputError("malformed net line " + std::to_string(line_no) + ": '" + line + "'");
    pts.points.emplace_back(x, y);
  }
  return pts;
}

namespace {

// Bit-linear map on m-bit indices given by rows[r] = mask of input bits feeding
// output bit r; bit r of an index is its r-th most significant bit.
Permutation linear_permutation(int m, const std::vector<std::uint32_t>& rows, std::uint32_t shift) {
  const int n = 1 << m;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint32_t in = 0;
    for (int c = 0; c < m; ++c) in |= static_cast<std::uint32_t>((i >> (m - 1 - c)) & 1) << c;
    int out = 0;
    for (int r = 0; r < m; ++r) {
      int bit = std::popcount(rows[static_cast<std::size_t>(r)] & in) & 1;
      out |= bit << (m - 1 - r);
    }
    image[static_cast<std::size_t>(i)] = out ^ static_cast<int>(shift);
  }
  return Permutation(std::move(image));
}

// Unitriangular maps where output bit r depends on input bits 0..r (the leading
// bits), so each basic interval is sent to a basic interval of the same level.
std::vector<Permutation> prefix_group(int m, bool with_translations) {
  std::vector<std::pair<int, int>> free;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < r; ++c) free.emplace_back(r, c);
  std::vector<Permutation> group;
  const std::uint32_t shifts = with_translations ? (1u << m) : 1u;
  for (std::uint32_t choice = 0; choice < (1u << free.size()); ++choice) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) rows[static_cast<std::size_t>(r)] = 1u << r;
    for (std::size_t f = 0; f < free.size(); ++f)
      if ((choice >> f) & 1u) rows[static_cast<std::size_t>(free[f].first)] |= 1u << free[f].second;
    for (std::uint32_t s = 0; s < shifts; ++s) group.push_back(linear_permutation(m, rows, s));
  }
  return group;
}

}  // namespace

std::vector<Permutation> digital_net_coset(int m, bool with_translations) {
  if (m < 1) throw InputError("m must be >= 1");
  if (m > 4) throw SizeLimitError("digital_net_coset refused for m > 4");
  const std::vector<Permutation> group = prefix_group(m, with_translations);
  const Permutation x = gen_x(m);
  std::set<Permutation> coset;
  for (const Permutation& left : group) {
    const Permutation lx = compose(left, x);
    for (const Permutation& right : group) coset.insert(compose(lx, right));
  }
  return {coset.begin(), coset.end()};
}

SudokuGrid read_sudoku(std::istream& in, int t, int m) {
  const std::int64_t n = radix_power(t, m);
  SudokuGrid g{t, m, {}};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::vector<int> cells;
    std::string token;
    while (row >> token) {
      try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw InputError("");
        cells.push_back(v);
      } catch (const std::exception&) {
        throw InputError("invalid token '" + token + "' in sudoku grid");
      }
    }
    if (static_cast<std::int64_t>(cells.size()) != n)
      throw InputError("sudoku row " + std::to_string(g.cells.size() + 1) + " has " +
                       std::to_string(cells.size()) + " cells, expected " + std::to_string(n));
    g.cells.push_back(std::move(cells));
  }
  if (static_cast<std::int64_t>(g.cells.size()) != n)
    throw InputError("sudoku grid needs " + std::to_string(n) + " rows");
  return g;
}

std::vector<std::vector<int>> sudoku_symbol_positions(const SudokuGrid& g) {
  const std::int64_t n = radix_power(g.t, g.m);
  if (static_cast<std::int64_t>(g.cells.size()) != n) throw InputError("sudoku grid has the wrong number of rows");
  std::vector<std::vector<int>> positions(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t r = 0; r < g.cells.size(); ++r) {
    const auto& row = g.cells[r];
    if (static_cast<std::int64_t>(row.size()) != n) throw InputError("sudoku row " + std::to_string(r + 1) + " has the wrong length");
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 1 || v > n || positions[static_cast<std::size_t>(v - 1)][r] != -1)
        throw InputError("sudoku row " + std::to_string(r + 1) + " is not a bijection of 1.." + std::to_string(n));
      positions[static_cast<std::size_t>(v - 1)][r] = static_cast<int>(c);
    }
  }
  return positions;
}

bool validate_sudoku(const SudokuGrid& g) {
  const auto positions = sudoku_symbol_positions(g);
  std::vector<Permutation> sigma;
  for (const auto& pos : positions) {
    std::vector<int> seen(pos.size(), 0);
    for (int c : pos)
      if (seen[static_cast<std::size_t>(c)]++) return false;  // symbol repeated in a column
    sigma.emplace_back(pos);
    if (!is_dwd_t(sigma.back(), g.t, g.m)) return false;
  }
  for (std::size_t v = 0; v < sigma.size(); ++v) {
    for (std::size_t w = v + 1; w < sigma.size(); ++w) {
      const Permutation q = compose(sigma[v], inverse(sigma[w]));
      for (int i = 0; i < q.size(); ++i)
        if (q(i) == i) return false;
    }
  }
  return true;
}

}  // namespace bruhatcube
