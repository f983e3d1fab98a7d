#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bruhatcube {

/// Integer polynomial in q; coefficient i multiplies q^i. Always normalized
/// so the leading coefficient is nonzero (the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coefficients);
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial q() { return IntPolynomial({0, 1}); }
  /// (q - 1)^k
  static IntPolynomial q_minus_one_power(int k);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::int64_t coefficient(int power) const;
  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  /// Multiplication by q^k.
  IntPolynomial shifted(int k) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<std::int64_t> coefficients_;
};

/// "q^4 - 4q^3 + 6q^2 - 4q + 1"; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& p);

}  // namespace bruhatcube
