#include "bruhatcube/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "bruhatcube/errors.hpp"

namespace bruhatcube {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty()) throw InputError("permutation must have degree >= 1");
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw InputError("not a bijection of {0,...," + std::to_string(size() - 1) + "}");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InputError("degree must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::swap_positions(int a, int b) const {
  std::vector<int> image = image_;
  std::swap(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
  return Permutation(std::move(image), Unchecked{});
}

Permutation Permutation::swap_values(int a, int b) const {
  std::vector<int> image = image_;
  for (int& v : image) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  return Permutation(std::move(image), Unchecked{});
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the images.
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::uint64_t>(v) + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t PermutationPairHash::operator()(
    const std::pair<Permutation, Permutation>& pq) const noexcept {
  PermutationHash h;
  std::size_t a = h(pq.first);
  std::size_t b = h(pq.second);
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("degree mismatch in compose");
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) image[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) image[static_cast<std::size_t>(p(i))] = i;
  return Permutation(std::move(image), Permutation::Unchecked{});
}

std::int64_t length(const Permutation& p) {
  // Fenwick tree over values seen so far.
  const int n = p.size();
  std::vector<int> tree(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t inversions = 0;
  for (int i = n - 1; i >= 0; --i) {
    for (int k = p(i); k > 0; k -= k & -k) inversions += tree[static_cast<std::size_t>(k)];
    for (int k = p(i) + 1; k <= n; k += k & -k) ++tree[static_cast<std::size_t>(k)];
  }
  return inversions;
}

Permutation from_word(int n, const Word& w) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  // p o s_i swaps the entries at positions i-1 and i of p.
  for (int letter : w) {
    if (letter < 1 || letter > n - 1)
      throw InputError("word letter " + std::to_string(letter) + " outside 1.." +
                       std::to_string(n - 1));
    std::swap(image[static_cast<std::size_t>(letter - 1)], image[static_cast<std::size_t>(letter)]);
  }
  return Permutation(std::move(image));
}

Permutation longest_element(int n) {
  if (n < 1) throw InputError("degree must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = n - 1 - i;
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("transposition entry out of range");
  return Permutation::identity(n).swap_positions(a, b);
}

Permutation from_cycles(int n, const std::vector<std::pair<int, int>>& transpositions) {
  Permutation result = Permutation::identity(n);
  for (auto [a, b] : transpositions) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
      throw InputError("cycle entry out of range 1.." + std::to_string(n));
    result = compose(result, transposition(n, a - 1, b - 1));
  }
  return result;
}

namespace {

std::vector<int> parse_integers(std::string_view text, std::string_view what) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',')
      ++j;
    std::string_view token = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw InputError("invalid token '" + std::string(token) + "' in " + std::string(what));
    values.push_back(value);
    i = j;
  }
  return values;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values = parse_integers(text, "permutation");
  if (values.empty()) throw InputError("empty permutation");
  std::vector<char> seen(values.size(), 0);
  for (int v : values) {
    if (v < 0 || static_cast<std::size_t>(v) >= values.size())
      throw InputError("invalid token '" + std::to_string(v) + "' in permutation: value out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw InputError("invalid token '" + std::to_string(v) + "' in permutation: repeated value");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_transpositions(std::string_view text) {
  std::vector<std::pair<int, int>> result;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw InputError("expected '(' in cycle notation");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw InputError("unterminated cycle");
    std::vector<int> entries = parse_integers(text.substr(i + 1, close - i - 1), "cycle");
    if (entries.size() != 2) throw InputError("only transpositions are supported in cycle notation");
    result.emplace_back(entries[0], entries[1]);
    i = close + 1;
  }
  return result;
}

}  // namespace bruhatcube
