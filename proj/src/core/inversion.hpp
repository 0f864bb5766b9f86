#pragma once

#include <vector>

#include "core/matrix.hpp"
#include "core/poset.hpp"

namespace mobiuslab {

class Lattice;

/// One value per element, indexed like the poset.
using PosetFunction = std::vector<Integer>;

/// g(x) = sum_{y >= x} f(y).
PosetFunction up_sums(const Poset& p, const PosetFunction& f);
/// g(x) = sum_{y <= x} f(y).
PosetFunction down_sums(const Poset& p, const PosetFunction& f);

/// f(z) = sum_y mu(z,y) g(y); inverse of up_sums.
PosetFunction invert_up(const Poset& p, const PosetFunction& g);
/// f(z) = sum_y mu(y,z) g(y); inverse of down_sums.
PosetFunction invert_down(const Poset& p, const PosetFunction& g);

/// Derangements of n points by inverting F(S) = (n - |S|)! over the subsets
/// of an n-set. 0 <= n <= 12.
Integer derangements(unsigned n);

/// Alternating series n! * sum_k (-1)^k / k!, evaluated exactly.
Integer derangements_series(unsigned n);

struct LindstromWilf {
  IntMatrix gram;
  Integer det;
  Integer product;
  bool pass = false;
};

/// G(x,y) = sum_{z >= x, z >= y} f(z); det G by fraction-free elimination,
/// compared with the product of f.
LindstromWilf lindstrom_wilf_det(const Poset& p, const PosetFunction& f);

/// Given g(x,y) = sum_{z >= x v y} f(z) on a lattice, recovers
/// f(y) = sum_z mu(y,z) g(z, z) and checks g on every pair.
struct LatticeGramRecovery {
  PosetFunction f;
  bool pass = false;
};
LatticeGramRecovery lattice_gram_recovery(const Lattice& l, const IntMatrix& gram);

}  // namespace mobiuslab
