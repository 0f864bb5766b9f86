#include "core/null_designs.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "core/incidence.hpp"

namespace mobiuslab {

MeetSemilattice MeetSemilattice::from_poset(Poset p) {
  const std::size_t n = p.size();
  const auto bottom = p.bottom();
  if (!bottom) throw Error(ErrorCode::NotALattice, "no zero element");
  MeetSemilattice m;
  m.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const auto common = p.down_set(a) & p.down_set(b);
      const auto count = common.count();
      std::optional<std::size_t> glb;
      for_each_bit(common, [&](std::size_t c) {
        if (!glb && p.down_set(c).count() == count && p.down_set(c).is_subset_of(common)) glb = c;
      });
      if (!glb)
        throw Error(ErrorCode::NotALattice, "no meet for " + p.label(a) + " and " + p.label(b));
      m.meet_[a * n + b] = m.meet_[b * n + a] = static_cast<std::uint32_t>(*glb);
    }
  m.zero_ = *bottom;
  m.height_ = p.heights();
  m.poset_ = std::move(p);
  return m;
}

std::size_t MeetSemilattice::height() const {
  return height_.empty() ? 0 : *std::max_element(height_.begin(), height_.end());
}

MeetSemilattice random_meet_semilattice(std::size_t max_size, std::uint64_t seed) {
  if (max_size < 1) throw Error(ErrorCode::InvalidArgument, "semilattice needs at least one element");
  std::mt19937_64 rng(seed);
  const unsigned ground = 5;
  std::set<std::uint32_t> family;
  // Grow the closure one random generator at a time until the next one would
  // overflow max_size.
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::set<std::uint32_t> next = family;
    const auto g = static_cast<std::uint32_t>(rng() % (1U << ground));
    std::vector<std::uint32_t> frontier{g};
    while (!frontier.empty()) {
      const auto s = frontier.back();
      frontier.pop_back();
      if (!next.insert(s).second) continue;
      for (auto t : std::vector<std::uint32_t>(next.begin(), next.end())) frontier.push_back(s & t);
    }
    if (next.size() <= max_size) family = std::move(next);
  }
  if (family.empty()) family.insert(0);
  std::vector<std::uint32_t> sets(family.begin(), family.end());
  std::vector<std::string> labels;
  for (auto s : sets) {
    std::string l = "{";
    for (unsigned i = 0; i < ground; ++i)
      if (s >> i & 1U) l += std::to_string(i + 1);
    labels.push_back(l + "}");
  }
  const std::size_t n = sets.size();
  std::vector<Poset::Bits> up(n, Poset::Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((sets[i] & sets[j]) == sets[i]) up[i].set(j);
  return MeetSemilattice::from_poset(Poset::from_trusted_relation(std::move(labels), std::move(up)));
}

long strength(const MeetSemilattice& p, const PosetFunction& f) {
  if (f.size() != p.size()) throw Error(ErrorCode::InvalidArgument, "function size does not match the poset");
  const auto g = up_sums(p.poset(), f);
  long first = -1;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (g[x] != 0 && (first < 0 || static_cast<long>(p.height(x)) < first)) first = static_cast<long>(p.height(x));
  return first < 0 ? static_cast<long>(p.height()) : first - 1;
}

IntervalRestriction restrict_to_interval(const MeetSemilattice& p, const PosetFunction& f, std::size_t b) {
  const std::size_t n = p.size();
  if (f.size() != n) throw Error(ErrorCode::InvalidArgument, "function size does not match the poset");
  if (b >= n) throw Error(ErrorCode::InvalidArgument, "element out of range");
  IntervalRestriction r{PosetFunction(n), PosetFunction(n), false};
  for (std::size_t x = 0; x < n; ++x) r.by_fibres[p.meet(x, b)] += f[x];
  const auto g = up_sums(p.poset(), f);
  for_each_bit(p.poset().down_set(b), [&](std::size_t c) {
    const auto mu = mobius_row(p.poset(), c);
    Integer v = 0;
    for_each_bit(p.poset().up_set(c) & p.poset().down_set(b), [&](std::size_t y) { v += mu[y] * g[y]; });
    r.by_inversion[c] = v;
  });
  r.agree = r.by_inversion == r.by_fibres;
  return r;
}

Integer support_lower_bound(const Poset& p, std::size_t b) {
  const auto mu = mobius_column(p, b);
  Integer sum = 0;
  for_each_bit(p.down_set(b), [&](std::size_t c) { sum += abs(mu[c]); });
  return sum;
}

Integer support_upper_sum(const Poset& p, std::size_t b) {
  const auto mu = mobius_row(p, b);
  Integer sum = 0;
  for_each_bit(p.up_set(b), [&](std::size_t c) { sum += abs(mu[c]); });
  return sum;
}

PosetFunction interval_design(const MeetSemilattice& p, std::size_t b) {
  const auto mu = mobius_column(p.poset(), b);
  PosetFunction f(p.size());
  for_each_bit(p.poset().down_set(b), [&](std::size_t c) { f[c] = mu[c]; });
  return f;
}

Report verify_support_theorem(const MeetSemilattice& p, const PosetFunction& f) {
  const std::size_t n = p.size();
  const long t = strength(p, f);
  Report r;
  r.identity = "support_bound";
  std::size_t support = 0;
  for (const auto& v : f) support += v != 0;
  r.details["strength"] = t;
  r.details["support"] = support;
  if (support == 0) {
    r.lhs = 0;
    r.rhs = 0;
    r.pass = true;
    r.details["vacuous"] = true;
    return r;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (f[x] != 0 && static_cast<long>(p.height(x)) > t + 1)
      throw Error(ErrorCode::Precondition, "f is nonzero at " + p.poset().label(x) + " of height " +
                                               std::to_string(p.height(x)) + " > t+1 = " + std::to_string(t + 1));
  const auto g = up_sums(p.poset(), f);
  std::optional<std::size_t> b;
  for (std::size_t x = 0; x < n; ++x)
    if (static_cast<long>(p.height(x)) == t + 1 && g[x] != 0 && (!b || abs(f[x]) > abs(f[*b]))) b = x;
  if (!b) throw Error(ErrorCode::Precondition, "no element of height t+1 with nonzero up-sum");
  const Integer bound = support_lower_bound(p.poset(), *b);
  r.lhs = support;
  r.rhs = to_json(bound);
  r.details["b"] = p.poset().label(*b);
  r.details["fhat_b"] = to_json(g[*b]);

  // Per-c ledger: mu(c,b) fhat(b) against the meet-fibre sum.
  const auto mu = mobius_column(p.poset(), *b);
  const auto fibres = restrict_to_interval(p, f, *b).by_fibres;
  bool ledger = true;
  for_each_bit(p.poset().down_set(*b), [&](std::size_t c) {
    if (mu[c] * g[*b] != fibres[c]) {
      ledger = false;
      r.witnesses.push_back(p.poset().label(c));
    }
  });
  r.details["fibre_identity"] = ledger;
  const bool bound_ok = Integer(static_cast<unsigned long>(support)) >= bound;
  bool equality_ok = true;
  if (Integer(static_cast<unsigned long>(support)) == bound) {
    const Integer lambda = abs(f[*b]);
    for (const auto& v : f) equality_ok = equality_ok && (v == 0 || abs(v) == lambda);
    bool unit = true;
    for (const auto& v : f) unit = unit && (v == 0 || abs(v) == 1);
    r.details["equality"] = true;
    r.details["two_valued"] = equality_ok;
    r.details["zero_plus_minus_one"] = unit;
  }
  r.pass = bound_ok && ledger && equality_ok;
  return r;
}

}  // namespace mobiuslab
