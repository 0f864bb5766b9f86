#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/poset.hpp"

namespace mobiuslab {

/// A poset with all binary joins and meets, stored as dense tables.
class Lattice {
 public:
  Lattice() = default;

  /// Throws NotALattice naming a pair without a join or meet, or a poset
  /// without a bottom or top.
  static Lattice from_poset(Poset p);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(std::size_t i) const { return poset_.label(i); }
  std::size_t index_of(std::string_view label) const { return poset_.index_of(label); }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }

  std::size_t zero() const { return 0; }
  std::size_t one() const { return size() - 1; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }

  /// Join of a set of elements; zero for the empty set.
  std::size_t join_all(const std::vector<std::size_t>& xs) const;
  std::size_t meet_all(const std::vector<std::size_t>& xs) const;

  /// Elements strictly between zero and one.
  Poset::Bits proper_part() const;

 protected:
  Poset poset_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
};

/// A lattice in which every cover raises the height by exactly one, so all
/// maximal chains between two elements have the same length.
class RankedLattice : public Lattice {
 public:
  RankedLattice() = default;

  /// Throws NotRanked naming a cover (a,b) with r(b) != r(a) + 1.
  static RankedLattice from_lattice(Lattice l);
  static RankedLattice from_poset(Poset p) { return from_lattice(Lattice::from_poset(std::move(p))); }

  std::size_t rank(std::size_t x) const { return rank_[x]; }
  const std::vector<std::size_t>& ranks() const { return rank_; }
  /// Rank of the top element.
  std::size_t height() const { return rank_.empty() ? 0 : rank_.back(); }

  /// Elements of the given rank, increasing.
  std::vector<std::size_t> of_rank(std::size_t r) const;

 private:
  std::vector<std::size_t> rank_;
};

std::vector<std::size_t> atoms(const Lattice& l);
std::vector<std::size_t> coatoms(const Lattice& l);

/// Every element is the join of the atoms below it.
bool is_point_lattice(const Lattice& l);

/// r(a ^ b) + r(a v b) <= r(a) + r(b) for all pairs.
bool is_semimodular(const RankedLattice& l);

bool is_geometric(const RankedLattice& l);

/// x with x ^ a = 0 and x v a = 1.
std::vector<std::size_t> complements(const Lattice& l, std::size_t a);
bool is_complemented(const Lattice& l);

/// Rank equality r(a ^ b) + r(a v b) = r(a) + r(b) for every b. Also checks
/// that the complements of a form an antichain, and throws Internal if the
/// two criteria disagree. Throws Precondition unless l is geometric.
bool is_modular_element(const RankedLattice& l, std::size_t a);

/// As is_modular_element, for callers that have already checked that l is
/// geometric.
bool is_modular_element_unchecked(const RankedLattice& l, std::size_t a);

/// Dedekind equality a v (b ^ c) = (a v b) ^ c for all a <= c and all b.
bool is_modular_lattice(const Lattice& l);

/// h ^ l > 0 for every coatom h and every rank-2 element l.
bool hyperplanes_meet_all_lines(const RankedLattice& l);

/// W_k = number of elements of rank k, k = 0..height.
std::vector<std::size_t> whitney_numbers(const RankedLattice& l);

/// The interval [a,b] as a ranked lattice.
RankedLattice interval_lattice(const Lattice& l, std::size_t a, std::size_t b);

/// Join-irreducible elements (0 included) and meet-irreducible elements
/// (1 included).
std::vector<std::size_t> join_irreducibles(const Lattice& l);
std::vector<std::size_t> meet_irreducibles(const Lattice& l);

/// Spot checks of commutativity, associativity and absorption on every pair
/// and on `triples` pseudo-random triples.
bool check_lattice_laws(const Lattice& l, std::size_t triples = 2000);

}  // namespace mobiuslab
