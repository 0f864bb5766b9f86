#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "core/matrix.hpp"
#include "core/poset.hpp"

namespace mobiuslab {

/// Z(i,j) = 1 iff i <= j. Upper triangular with unit diagonal.
IntMatrix zeta_matrix(const Poset& p);

/// Inverse of the zeta matrix, filled row by row with
/// mu(a,b) = -sum_{a <= x < b} mu(a,x).
IntMatrix mobius_matrix(const Poset& p);

/// mu(a, .) by the row recursion; zero off the up-set of a.
std::vector<Integer> mobius_row(const Poset& p, std::size_t a);

/// mu(., b) by the column recursion mu(a,b) = -sum_{a < y <= b} mu(y,b).
std::vector<Integer> mobius_column(const Poset& p, std::size_t b);

/// mu(a,b); zero when a is not below b.
Integer mobius(const Poset& p, std::size_t a, std::size_t b);
Integer mobius(const Poset& p, std::string_view a, std::string_view b);

/// Signed count of chains a = x0 < x1 < ... < xk = b, weight (-1)^k, by
/// explicit enumeration. Throws InvalidArgument when a is not below b.
Integer mobius_by_chains(const Poset& p, std::size_t a, std::size_t b);

/// Number of chains from a to b (every length), by enumeration.
Integer count_chains(const Poset& p, std::size_t a, std::size_t b);

/// (Z - I)^m: entry (i,j) counts chains of length m from i to j.
IntMatrix strict_zeta_power(const Poset& p, unsigned m);

/// Z^m by repeated squaring.
IntMatrix zeta_power(const Poset& p, unsigned m);

struct ZetaPolyCheck {
  bool pass = false;
  /// Interpolating polynomial in m, ascending coefficients.
  std::vector<Rational> coefficients;
  std::vector<unsigned> sampled;
  std::vector<unsigned> held_out;
  std::vector<Integer> values;
  std::vector<Integer> predicted;
};

/// Interpolates Z^m(i,j) through the first L+1 sample values of m, where L
/// is the length of a longest chain of p, then checks the remaining samples
/// and two further values of m against the polynomial. Throws
/// InvalidArgument with fewer than L+1 distinct samples.
ZetaPolyCheck zeta_power_poly_check(const Poset& p, std::size_t i, std::size_t j,
                                    const std::vector<unsigned>& ms);

/// mu of p with a fresh bottom and top adjoined; -1 for the empty poset.
Integer mobius_number(const Poset& p);

/// Mobius number of the subposet induced on `subset`.
Integer mobius_number(const Poset& p, const Poset::Bits& subset);

}  // namespace mobiuslab
