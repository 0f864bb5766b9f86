#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mobiuslab {

/// Arithmetic in GF(q) for q in {2, 3, 4, 5}. Elements are 0..q-1; for
/// GF(4), 2 stands for a root x of x^2 = x + 1 and 3 for x + 1.
class FiniteField {
 public:
  /// Throws InvalidArgument for unsupported q.
  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  unsigned inv(unsigned a) const { return inv_[a]; }

 private:
  unsigned q_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace mobiuslab
