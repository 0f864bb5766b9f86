#include "core/polynomial.hpp"

#include <algorithm>

namespace mobiuslab {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t k, Integer c) {
  std::vector<Integer> v(k + 1);
  v[k] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& v = c_[k];
    if (v == 0) continue;
    Integer mag = abs(v);
    if (out.empty()) out += v < 0 ? "-" : "";
    else out += v < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Json IntPolynomial::to_json() const {
  Json j = Json::array();
  for (const auto& v : c_) j.push_back(mobiuslab::to_json(v));
  return j;
}

}  // namespace mobiuslab
