#include "core/finite_field.hpp"

#include "core/error.hpp"

namespace mobiuslab {

FiniteField::FiniteField(unsigned q) : q_(q) {
  if (q != 2 && q != 3 && q != 4 && q != 5)
    throw Error(ErrorCode::InvalidArgument, "unsupported field size " + std::to_string(q) + " (use 2, 3, 4 or 5)");
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);
  if (q == 4) {
    // Characteristic 2: addition is XOR of coefficient bits. Multiplication
    // through powers of the generator x: x^0 = 1, x^1 = 2, x^2 = 3.
    const unsigned antilog[3] = {1, 2, 3};
    unsigned log[4] = {0, 0, 1, 2};
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) {
        add_[a * 4 + b] = static_cast<std::uint8_t>(a ^ b);
        mul_[a * 4 + b] = (a == 0 || b == 0) ? 0 : static_cast<std::uint8_t>(antilog[(log[a] + log[b]) % 3]);
      }
  } else {
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
        mul_[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
      }
  }
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = static_cast<std::uint8_t>(b);
      if (mul(a, b) == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
}

}  // namespace mobiuslab
