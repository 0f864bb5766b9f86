#include "core/lattice.hpp"

#include <random>

#include "core/error.hpp"
#include "core/size_guard.hpp"

namespace mobiuslab {

Lattice Lattice::from_poset(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorCode::NotALattice, "the empty poset is not a lattice");
  check_size("lattice", static_cast<double>(n));
  if (!p.bottom()) {
    auto mins = p.minimal_elements();
    throw Error(ErrorCode::NotALattice, "no least element: '" + p.label(mins[0]) + "' and '" +
                                            p.label(mins[1]) + "' are both minimal");
  }
  if (!p.top()) {
    auto maxs = p.maximal_elements();
    throw Error(ErrorCode::NotALattice, "no greatest element: '" + p.label(maxs[0]) + "' and '" +
                                            p.label(maxs[1]) + "' are both maximal");
  }
  Lattice l;
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  Poset::Bits common(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      // The least upper bound, if it exists, is the first common upper bound
      // in the linear extension, and lies below all the others.
      common = p.up_set(a) & p.up_set(b);
      std::size_t j = common.find_first();
      if (!common.is_subset_of(p.up_set(j)))
        throw Error(ErrorCode::NotALattice,
                    "'" + p.label(a) + "' and '" + p.label(b) + "' have no least upper bound");
      common = p.down_set(a) & p.down_set(b);
      const std::size_t below = common.count();
      std::size_t m = n;
      for_each_bit(common, [&](std::size_t x) {
        if (m == n && p.down_set(x).count() == below) m = x;
      });
      if (m == n)
        throw Error(ErrorCode::NotALattice,
                    "'" + p.label(a) + "' and '" + p.label(b) + "' have no greatest lower bound");
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(j);
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(m);
    }
  }
  l.poset_ = std::move(p);
  return l;
}

std::size_t Lattice::join_all(const std::vector<std::size_t>& xs) const {
  std::size_t j = zero();
  for (auto x : xs) j = join(j, x);
  return j;
}

std::size_t Lattice::meet_all(const std::vector<std::size_t>& xs) const {
  std::size_t m = one();
  for (auto x : xs) m = meet(m, x);
  return m;
}

Poset::Bits Lattice::proper_part() const {
  Poset::Bits b = poset_.full_bits();
  b.reset(zero());
  b.reset(one());
  return b;
}

RankedLattice RankedLattice::from_lattice(Lattice l) {
  RankedLattice r;
  static_cast<Lattice&>(r) = std::move(l);
  const auto& p = r.poset();
  r.rank_ = p.heights();
  for (const auto& [a, b] : p.covers())
    if (r.rank_[b] != r.rank_[a] + 1)
      throw Error(ErrorCode::NotRanked, "not ranked: '" + p.label(b) + "' covers '" + p.label(a) +
                                            "' but their ranks are " + std::to_string(r.rank_[b]) +
                                            " and " + std::to_string(r.rank_[a]));
  return r;
}

std::vector<std::size_t> RankedLattice::of_rank(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (rank_[i] == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> atoms(const Lattice& l) { return l.poset().upper_covers(l.zero()); }

std::vector<std::size_t> coatoms(const Lattice& l) { return l.poset().lower_covers(l.one()); }

bool is_point_lattice(const Lattice& l) {
  const auto pts = atoms(l);
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::size_t j = l.zero();
    for (auto p : pts)
      if (l.leq(p, x)) j = l.join(j, p);
    if (j != x) return false;
  }
  return true;
}

bool is_semimodular(const RankedLattice& l) {
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b)
      if (l.rank(l.meet(a, b)) + l.rank(l.join(a, b)) > l.rank(a) + l.rank(b)) return false;
  return true;
}

bool is_geometric(const RankedLattice& l) { return is_semimodular(l) && is_point_lattice(l); }

std::vector<std::size_t> complements(const Lattice& l, std::size_t a) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.meet(a, x) == l.zero() && l.join(a, x) == l.one()) out.push_back(x);
  return out;
}

bool is_complemented(const Lattice& l) {
  for (std::size_t a = 0; a < l.size(); ++a)
    if (complements(l, a).empty()) return false;
  return true;
}

bool is_modular_element(const RankedLattice& l, std::size_t a) {
  if (!is_geometric(l)) throw Error(ErrorCode::Precondition, "modular elements are defined in geometric lattices");
  return is_modular_element_unchecked(l, a);
}

bool is_modular_element_unchecked(const RankedLattice& l, std::size_t a) {
  bool by_rank = true;
  for (std::size_t b = 0; b < l.size() && by_rank; ++b)
    by_rank = l.rank(l.meet(a, b)) + l.rank(l.join(a, b)) == l.rank(a) + l.rank(b);
  auto comps = complements(l, a);
  bool antichain = true;
  for (std::size_t i = 0; i < comps.size() && antichain; ++i)
    for (std::size_t j = i + 1; j < comps.size() && antichain; ++j)
      antichain = !l.poset().comparable(comps[i], comps[j]);
  if (by_rank != antichain)
    throw Error(ErrorCode::Internal, "modular element criteria disagree at '" + l.label(a) + "'");
  return by_rank;
}

bool is_modular_lattice(const Lattice& l) {
  const auto& p = l.poset();
  for (std::size_t a = 0; a < l.size(); ++a) {
    bool ok = true;
    for_each_bit(p.up_set(a), [&](std::size_t c) {
      for (std::size_t b = 0; b < l.size() && ok; ++b)
        ok = l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c);
    });
    if (!ok) return false;
  }
  return true;
}

bool hyperplanes_meet_all_lines(const RankedLattice& l) {
  const auto lines = l.of_rank(2);
  for (auto h : coatoms(l))
    for (auto line : lines)
      if (l.meet(h, line) == l.zero()) return false;
  return true;
}

std::vector<std::size_t> whitney_numbers(const RankedLattice& l) {
  std::vector<std::size_t> w(l.height() + 1, 0);
  for (auto r : l.ranks()) ++w[r];
  return w;
}

RankedLattice interval_lattice(const Lattice& l, std::size_t a, std::size_t b) {
  return RankedLattice::from_poset(interval(l.poset(), a, b));
}

std::vector<std::size_t> join_irreducibles(const Lattice& l) {
  // x is join-irreducible iff it covers at most one element.
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.poset().lower_covers(x).size() <= 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> meet_irreducibles(const Lattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.poset().upper_covers(x).size() <= 1) out.push_back(x);
  return out;
}

bool check_lattice_laws(const Lattice& l, std::size_t triples) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (l.join(a, b) != l.join(b, a) || l.meet(a, b) != l.meet(b, a)) return false;
      if (l.join(a, l.meet(a, b)) != a || l.meet(a, l.join(a, b)) != a) return false;
    }
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < triples; ++t) {
    auto a = pick(rng), b = pick(rng), c = pick(rng);
    if (l.join(a, l.join(b, c)) != l.join(l.join(a, b), c)) return false;
    if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c)) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!l.leq(l.zero(), x) || !l.leq(x, l.one())) return false;
  return true;
}

}  // namespace mobiuslab
