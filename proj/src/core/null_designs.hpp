#pragma once

#include <cstdint>
#include <vector>

#include "core/inversion.hpp"
#include "core/poset.hpp"
#include "core/report.hpp"

namespace mobiuslab {

/// Poset with a zero in which every pair has a greatest lower bound.
class MeetSemilattice {
 public:
  MeetSemilattice() = default;

  /// Throws NotALattice naming a pair without a meet, or when there is no
  /// zero.
  static MeetSemilattice from_poset(Poset p);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  std::size_t zero() const { return zero_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  /// Longest chain from the zero.
  std::size_t height(std::size_t x) const { return height_[x]; }
  std::size_t height() const;

 private:
  Poset poset_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::size_t> height_;
  std::size_t zero_ = 0;
};

/// Random intersection-closed family of subsets of a small ground set,
/// ordered by inclusion, with at most max_size members.
MeetSemilattice random_meet_semilattice(std::size_t max_size, std::uint64_t seed);

/// Largest t such that the up-sum of f vanishes at every element of height
/// at most t. The zero function has strength equal to the height of P; -1
/// when the up-sum fails at the zero.
long strength(const MeetSemilattice& p, const PosetFunction& f);

struct IntervalRestriction {
  /// Moebius inversion of the up-sums of f over [0,b].
  PosetFunction by_inversion;
  /// f_b(c) = sum of f(x) over x with x meet b = c.
  PosetFunction by_fibres;
  bool agree = false;
};

/// Both routes to f_b, zero outside [0,b].
IntervalRestriction restrict_to_interval(const MeetSemilattice& p, const PosetFunction& f, std::size_t b);

/// sum over c <= b of |mu(c,b)|.
Integer support_lower_bound(const Poset& p, std::size_t b);

/// sum over c >= b of |mu(b,c)|.
Integer support_upper_sum(const Poset& p, std::size_t b);

/// f(x) = mu(x,b) on [0,b], zero elsewhere: strength height(b)-1, supported
/// on [0,b] with support size equal to the number of c <= b with mu(c,b) != 0.
PosetFunction interval_design(const MeetSemilattice& p, std::size_t b);

/// For f of strength t supported on heights <= t+1: picks b of height t+1
/// maximizing |f(b)| among those with nonzero up-sum, checks
/// |supp f| >= sum_{c<=b} |mu(c,b)| and the per-c identity
/// mu(c,b) fhat(b) = sum_{x meet b = c} f(x); at equality checks that f takes
/// only the values 0 and +-|f(b)|. The zero function passes vacuously.
/// Throws Precondition when f has support above height t+1.
Report verify_support_theorem(const MeetSemilattice& p, const PosetFunction& f);

}  // namespace mobiuslab
