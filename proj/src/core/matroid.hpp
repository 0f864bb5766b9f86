#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"
#include "core/lattice.hpp"
#include "core/polynomial.hpp"
#include "core/report.hpp"

namespace mobiuslab {

/// The matroid on the atoms of a geometric lattice, r(T) = r(v T). Atom
/// subsets are bitmasks over positions in atoms(). Holds a reference to the
/// lattice, which must outlive it.
class AtomMatroid {
 public:
  using Set = std::uint64_t;

  /// Throws SizeGuard beyond 28 atoms.
  explicit AtomMatroid(const RankedLattice& l);

  const RankedLattice& lattice() const { return *l_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::size_t>& atoms() const { return atoms_; }

  /// Lattice element spanned by the atoms in s.
  std::size_t span(Set s) const;
  std::size_t rank(Set s) const { return l_->rank(span(s)); }
  bool independent(Set s) const;

 private:
  const RankedLattice* l_;
  std::vector<std::size_t> atoms_;
};

/// All independent sets, by extension of smaller independent sets.
std::vector<AtomMatroid::Set> independents(const AtomMatroid& m);

/// All circuits (minimal dependent sets).
std::vector<AtomMatroid::Set> circuits(const AtomMatroid& m);

/// Circuits with their least atom removed; `order` lists atom positions from
/// least to greatest.
std::vector<AtomMatroid::Set> broken_circuits(const AtomMatroid& m, const std::vector<std::size_t>& order);

/// counts[k] = number of independent k-sets containing no broken circuit.
std::vector<Integer> nbc_counts(const AtomMatroid& m, const std::vector<std::size_t>& order);

/// Every maximal independent set without a broken circuit has full rank.
bool nbc_complex_is_pure(const AtomMatroid& m, const std::vector<std::size_t>& order);

/// r(empty) = 0, r(p) = 1, monotone and submodular on every pair of atom
/// subsets. Throws SizeGuard beyond 12 atoms.
bool rank_axioms_hold(const AtomMatroid& m);

/// w_k = sum of mu(0,a) over elements of rank k.
std::vector<Integer> whitney_rank_sums(const RankedLattice& l);

/// sum_k w_k x^{d-k}.
IntPolynomial characteristic_polynomial(const RankedLattice& l);

/// sum_k w_k x^{n-k} over the contraction lattice of g.
IntPolynomial chromatic_polynomial(const Graph& g);

/// Unsigned Stirling number of the first kind, 0 <= k <= n <= 12, read off
/// the expansion of x(x-1)...(x-n+1).
Integer stirling_first_unsigned(unsigned n, unsigned k);

/// Lattice of flats of the columns of a matrix over GF(q), labelled by the
/// column indices they contain ("{0,2}").
RankedLattice column_flats(const std::vector<std::vector<unsigned>>& generator, unsigned q);

/// Counts full-weight codewords a^T G by enumerating a in GF(q)^{d+1} and
/// compares with F_L(q) for the lattice of flats of the columns; with t > 1
/// also counts t-tuples of codewords with no common zero coordinate against
/// F_L(q^t). Throws InvalidArgument on a zero column, SizeGuard when
/// q^{(d+1)t} exceeds 10^7.
Report codeword_weight_check(const std::vector<std::vector<unsigned>>& generator, unsigned q, unsigned t = 1);

}  // namespace mobiuslab
