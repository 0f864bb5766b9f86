#pragma once

#include <vector>

#include "core/lattice.hpp"
#include "core/report.hpp"

namespace mobiuslab {

/// mu(0,1) = -sum_{x v a = 1, x < 1} mu(0,x). Throws InvalidArgument for a = 0.
Report weisner_check(const Lattice& l, std::size_t a);

/// sum_k (-1)^k a_k, a_k = number of k-subsets of C with join 1 and meet 0.
/// C must lie in the proper part and meet every maximal chain; otherwise
/// Precondition is thrown, with an avoiding maximal chain when there is one.
Integer cutset_mobius(const Lattice& l, const std::vector<std::size_t>& c);
Report cutset_check(const Lattice& l, const std::vector<std::size_t>& c);

/// Mobius number of the proper part with the complements of a removed;
/// must be 0. Throws InvalidArgument unless 0 < a < 1.
Report walker_complement_check(const Lattice& l, std::size_t a);

/// mu(0,1) = mu(0,a) * sum over complements x of a of mu(0,x), for a modular
/// element a of a geometric lattice. Also checks that y -> y v b maps
/// [a ^ b, a] isomorphically onto [b, a v b] for every b.
Report modular_factorization(const RankedLattice& l, std::size_t a);

/// (-1)^{r(b)-r(a)} mu(a,b) > 0 on every interval.
Report alternating_sign_check(const RankedLattice& l);

/// G(p,q) = [p v q = 1]; det G = prod_p mu(p,1), a permutation sigma with
/// p v sigma(p) = 1 read off a perfect matching of the support, and the
/// partial-sum Whitney inequalities. Throws Precondition if some mu(p,1) = 0.
Report dowling_wilson_check(const RankedLattice& l);

/// Complement-pairing permutation from the matrix of Mobius numbers
/// mu(G(p)_{<= q}), G(p) = {x in L' : x v p < 1}. Throws Precondition if
/// some mu(0,p) mu(p,1) = 0.
Report dowling_complement_check(const Lattice& l);

/// Points versus hyperplanes: W_1 = W_{d-1} iff modular, with modularity
/// decided three ways, plus the inverse of G(a,b) = [a v b = 1] at pairs
/// with a ^ b = 0. Throws Precondition unless geometric.
Report basterfield_kelly_check(const RankedLattice& l);

/// A = rank <= k, B = rank >= d-k, x* = 1: hypotheses, full row rank of
/// Z[A,B] and an injection a -> phi(a) >= a. On modular lattices also
/// |J(L)| = |M(L)|. Throws Precondition on a hypothesis violation.
Report kung_check(const RankedLattice& l, std::size_t k);

struct PointDeletion {
  Lattice deletion;
  bool coloop = false;
  Report report;
};

/// Deletes the atom p: the fixed points of f(a) = v{q atom, q != p, q <= a}
/// form the lattice L\p, and mu_L(0,1) is checked against
/// -mu_L(p,1) (co-loop) or mu_{L\p}(0,1) - mu_L(p,1).
PointDeletion point_deletion(const Lattice& l, std::size_t p);

}  // namespace mobiuslab
