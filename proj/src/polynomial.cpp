#include "bruhatcube/polynomial.hpp"

#include <cstdlib>

namespace bruhatcube {

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients)
    : coefficients_(coefficients) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

IntPolynomial IntPolynomial::q_minus_one_power(int k) {
  IntPolynomial result = constant(1);
  const IntPolynomial factor({-1, 1});
  for (int i = 0; i < k; ++i) result = result * factor;
  return result;
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::int64_t IntPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(power)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] += other.coefficients_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] -= other.coefficients_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), coefficients_.begin(), coefficients_.end());
  return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int power = p.degree(); power >= 0; --power) {
    std::int64_t c = p.coefficient(power);
    if (c == 0) continue;
    std::uint64_t magnitude = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (magnitude != 1 || power == 0) out += std::to_string(magnitude);
    if (power >= 1) out += "q";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

}  // namespace bruhatcube
