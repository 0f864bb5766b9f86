#pragma once

#include <string>
#include <vector>

#include "core/integer.hpp"

namespace mobiuslab {

/// Integer polynomial, coefficients ascending by degree, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  /// x^k.
  static IntPolynomial monomial(std::size_t k, Integer c = 1);

  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

  Integer operator()(const Integer& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  /// "x^3 - 3x^2 + 2x".
  std::string to_string() const;
  /// Ascending integer array.
  Json to_json() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

}  // namespace mobiuslab
