#include "core/lattice_identities.hpp"

#include <algorithm>
#include <deque>

#include "core/incidence.hpp"
#include "core/matching.hpp"
#include "core/matrix.hpp"
#include "core/size_guard.hpp"

namespace mobiuslab {

namespace {

Json labels_of(const Lattice& l, const std::vector<std::size_t>& xs) {
  Json j = Json::array();
  for (auto x : xs) j.push_back(l.label(x));
  return j;
}

Integer mu_zero_one(const Lattice& l) { return mobius_row(l.poset(), l.zero())[l.one()]; }

Json sigma_json(const Lattice& l, const std::vector<std::size_t>& sigma) {
  Json j = Json::object();
  for (std::size_t p = 0; p < sigma.size(); ++p) j[l.label(p)] = l.label(sigma[p]);
  return j;
}

}  // namespace

Report weisner_check(const Lattice& l, std::size_t a) {
  if (a == l.zero()) throw Error(ErrorCode::InvalidArgument, "Weisner: a must not be the bottom element");
  const auto mu = mobius_row(l.poset(), l.zero());
  Report r;
  r.identity = "weisner";
  Integer rhs;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.one() || l.join(x, a) != l.one()) continue;
    rhs -= mu[x];
    r.witnesses.push_back(l.label(x));
  }
  r.lhs = to_json(mu[l.one()]);
  r.rhs = to_json(rhs);
  r.pass = mu[l.one()] == rhs;
  r.details["a"] = l.label(a);
  return r;
}

Integer cutset_mobius(const Lattice& l, const std::vector<std::size_t>& c) {
  for (auto x : c)
    if (x == l.zero() || x == l.one())
      throw Error(ErrorCode::Precondition, "cutset element '" + l.label(x) + "' is not in the proper part");
  // A maximal chain is a cover path from 0 to 1; search for one avoiding C.
  const auto& p = l.poset();
  std::vector<bool> blocked(l.size(), false);
  for (auto x : c) blocked[x] = true;
  std::vector<std::size_t> parent(l.size(), l.size());
  std::deque<std::size_t> queue{l.zero()};
  parent[l.zero()] = l.zero();
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto y : p.upper_covers(x)) {
      if (blocked[y] || parent[y] != l.size()) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (l.one() != l.zero() && parent[l.one()] != l.size()) {
    std::vector<std::size_t> chain;
    for (auto x = l.one(); x != l.zero(); x = parent[x]) chain.push_back(x);
    chain.push_back(l.zero());
    std::string text;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) text += (text.empty() ? "" : " < ") + l.label(*it);
    throw Error(ErrorCode::Precondition, "not a cutset: the maximal chain " + text + " avoids it");
  }
  if (l.one() == l.zero()) throw Error(ErrorCode::Precondition, "a one-element lattice has no cutset");
  const std::size_t m = c.size();
  check_size("cutset subsets", static_cast<double>(std::size_t{1} << std::min<std::size_t>(m, 62)), std::size_t{1} << 24);
  const std::size_t count = std::size_t{1} << m;
  std::vector<std::uint32_t> join(count), meet(count);
  join[0] = static_cast<std::uint32_t>(l.zero());
  meet[0] = static_cast<std::uint32_t>(l.one());
  Integer total;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    join[mask] = static_cast<std::uint32_t>(l.join(join[rest], c[low]));
    meet[mask] = static_cast<std::uint32_t>(l.meet(meet[rest], c[low]));
    if (join[mask] == l.one() && meet[mask] == l.zero()) total += (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
  }
  return total;
}

Report cutset_check(const Lattice& l, const std::vector<std::size_t>& c) {
  Report r;
  r.identity = "cutset";
  r.lhs = to_json(mu_zero_one(l));
  Integer sum = cutset_mobius(l, c);
  r.rhs = to_json(sum);
  r.pass = r.lhs == r.rhs;
  r.details["cutset"] = labels_of(l, c);
  return r;
}

Report walker_complement_check(const Lattice& l, std::size_t a) {
  if (a == l.zero() || a == l.one())
    throw Error(ErrorCode::InvalidArgument, "Walker: '" + l.label(a) + "' is not in the proper part");
  auto comps = complements(l, a);
  auto subset = l.proper_part();
  for (auto x : comps) subset.reset(x);
  Report r;
  r.identity = "walker_complement";
  Integer m = mobius_number(l.poset(), subset);
  r.lhs = to_json(m);
  r.rhs = 0;
  r.pass = m == 0;
  r.details["a"] = l.label(a);
  r.details["complements"] = labels_of(l, comps);
  return r;
}

Report modular_factorization(const RankedLattice& l, std::size_t a) {
  if (a == l.zero() || a == l.one())
    throw Error(ErrorCode::InvalidArgument, "modular factorization: a must lie strictly between 0 and 1");
  if (!is_modular_element(l, a))
    throw Error(ErrorCode::Precondition, "'" + l.label(a) + "' is not a modular element");
  const auto& p = l.poset();
  const auto mu = mobius_row(p, l.zero());
  auto comps = complements(l, a);
  Integer sum;
  for (auto x : comps) sum += mu[x];
  Report r;
  r.identity = "modular_factorization";
  r.lhs = to_json(mu[l.one()]);
  Integer rhs = mu[a] * sum;
  r.rhs = to_json(rhs);

  // y -> y v b from [a ^ b, a] onto [b, a v b], inverse z -> z ^ a.
  bool intervals_ok = true;
  for (std::size_t b = 0; b < l.size() && intervals_ok; ++b) {
    const auto lo = l.meet(a, b), hi = l.join(a, b);
    const Poset::Bits source = p.up_set(lo) & p.down_set(a);
    const Poset::Bits target = p.up_set(b) & p.down_set(hi);
    if (source.count() != target.count()) {
      intervals_ok = false;
      r.witnesses.push_back(l.label(b));
      break;
    }
    for_each_bit(source, [&](std::size_t y) {
      const auto z = l.join(y, b);
      if (!target.test(z) || l.meet(z, a) != y) intervals_ok = false;
    });
    for_each_bit(target, [&](std::size_t z) {
      const auto y = l.meet(z, a);
      if (!source.test(y) || l.join(y, b) != z) intervals_ok = false;
    });
    if (!intervals_ok) r.witnesses.push_back(l.label(b));
  }
  r.pass = mu[l.one()] == rhs && intervals_ok;
  r.details["a"] = l.label(a);
  r.details["mu_0_a"] = to_json(mu[a]);
  r.details["complements"] = labels_of(l, comps);
  r.details["interval_isomorphisms"] = intervals_ok;
  return r;
}

Report alternating_sign_check(const RankedLattice& l) {
  Report r;
  r.identity = "alternating_sign";
  std::size_t checked = 0, failed = 0;
  const auto& p = l.poset();
  for (std::size_t a = 0; a < l.size(); ++a) {
    auto row = mobius_row(p, a);
    for_each_bit(p.up_set(a), [&](std::size_t b) {
      ++checked;
      const bool odd = (l.rank(b) - l.rank(a)) % 2 == 1;
      if ((odd ? Integer(-row[b]) : row[b]) <= 0) {
        ++failed;
        if (r.witnesses.size() < 10) r.witnesses.push_back(Json::array({l.label(a), l.label(b)}));
      }
    });
  }
  r.lhs = checked - failed;
  r.rhs = checked;
  r.pass = failed == 0;
  return r;
}

Report dowling_wilson_check(const RankedLattice& l) {
  const std::size_t n = l.size();
  const auto& p = l.poset();
  const auto mu1 = mobius_column(p, l.one());
  Integer product = 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (mu1[x] == 0)
      throw Error(ErrorCode::Precondition, "Dowling-Wilson: mu('" + l.label(x) + "', 1) = 0");
    product *= mu1[x];
  }
  IntMatrix g(n, n);
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (l.join(a, b) == l.one()) {
        g(a, b) = 1;
        support[a].push_back(b);
      }
  Report r;
  r.identity = "dowling_wilson";
  Integer det = determinant(g);
  r.lhs = to_json(det);
  r.rhs = to_json(product);
  bool ok = det == product && det != 0;

  auto sigma = saturating_matching(n, support);
  bool sigma_ok = sigma.has_value();
  bool zero_to_one = false, rank_sum = true, atoms_to_coatoms = true;
  if (sigma) {
    zero_to_one = (*sigma)[l.zero()] == l.one();
    for (std::size_t x = 0; x < n; ++x) {
      sigma_ok = sigma_ok && l.join(x, (*sigma)[x]) == l.one();
      if (l.rank(x) + l.rank((*sigma)[x]) < l.height()) {
        rank_sum = false;
        r.witnesses.push_back(l.label(x));
      }
    }
    for (auto a : atoms(l)) atoms_to_coatoms = atoms_to_coatoms && l.rank((*sigma)[a]) + 1 == l.height();
    r.details["sigma"] = sigma_json(l, *sigma);
  }
  const auto w = whitney_numbers(l);
  const std::size_t d = l.height();
  bool partial_sums = true;
  Json sums = Json::array();
  for (std::size_t k = 0; k <= d; ++k) {
    std::size_t low = 0, high = 0;
    for (std::size_t i = 0; i <= k; ++i) low += w[i];
    for (std::size_t i = d - k; i <= d; ++i) high += w[i];
    sums.push_back(Json::array({low, high}));
    partial_sums = partial_sums && low <= high;
  }
  r.details["permutation_found"] = sigma.has_value();
  r.details["sigma_zero_to_one"] = zero_to_one;
  r.details["rank_sum_at_least_height"] = rank_sum;
  r.details["atoms_to_coatoms"] = atoms_to_coatoms;
  r.details["partial_sums"] = sums;
  r.details["partial_sum_inequalities"] = partial_sums;
  r.pass = ok && sigma_ok && zero_to_one;
  // The rank and Whitney consequences need semimodularity.
  if (is_geometric(l)) r.pass = r.pass && rank_sum && atoms_to_coatoms && partial_sums;
  return r;
}

Report dowling_complement_check(const Lattice& l) {
  const std::size_t n = l.size();
  if (n < 2) throw Error(ErrorCode::Precondition, "Dowling complement check needs at least two elements");
  const auto& p = l.poset();
  const auto mu0 = mobius_row(p, l.zero());
  const auto mu1 = mobius_column(p, l.one());
  for (std::size_t x = 0; x < n; ++x)
    if (mu0[x] * mu1[x] == 0)
      throw Error(ErrorCode::Precondition,
                  "Dowling complement: mu(0,'" + l.label(x) + "') mu('" + l.label(x) + "',1) = 0");

  // A = H D Z: A(p,q) = sum_{z <= q, z v p = 1} mu(0,z).
  IntMatrix a(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t q = 0; q < n; ++q) {
      Integer s;
      for_each_bit(p.down_set(q), [&](std::size_t z) {
        if (l.join(z, x) == l.one()) s += mu0[z];
      });
      a(x, q) = s;
    }

  IntMatrix m = a;
  const auto proper = l.proper_part();
  std::size_t interior_mismatch = 0;
  bool lemma_ok = true;
  Report r;
  r.identity = "dowling_complement";
  for (std::size_t x = 0; x < n; ++x) {
    if (x == l.one()) continue;
    Poset::Bits g = proper;
    for_each_bit(proper, [&](std::size_t y) {
      if (l.join(y, x) == l.one()) g.reset(y);
    });
    for (std::size_t q = 1; q < n; ++q) {
      Integer v = mobius_number(p, g & p.down_set(q));
      if (v != a(x, q)) {
        ++interior_mismatch;
        if (r.witnesses.size() < 10) r.witnesses.push_back(Json::array({l.label(x), l.label(q)}));
      }
      if (v != 0 && !(l.meet(x, q) == l.zero() && l.join(x, q) == l.one())) lemma_ok = false;
      m(x, q) = v;
    }
  }
  Integer det = determinant(m);
  Integer expected = 1;
  for (std::size_t x = 0; x < n; ++x) expected *= mu0[x] * mu1[x];
  r.lhs = to_json(det);
  r.rhs = to_json(expected);

  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t q = 0; q < n; ++q)
      if (m(x, q) != 0) support[x].push_back(q);
  auto sigma = saturating_matching(n, support);
  bool complements_ok = sigma.has_value();
  if (sigma) {
    for (std::size_t x = 0; x < n; ++x) {
      auto s = (*sigma)[x];
      complements_ok = complements_ok && l.meet(x, s) == l.zero() && l.join(x, s) == l.one();
    }
    r.details["sigma"] = sigma_json(l, *sigma);
  }
  r.details["interior_matches_HDZ"] = interior_mismatch == 0;
  IntMatrix minus_ztdh = a.transpose();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t q = 0; q < n; ++q) minus_ztdh(x, q) = -minus_ztdh(x, q);
  r.details["equals_minus_ZtDH"] = m == minus_ztdh;
  r.details["nonzero_entries_are_complements"] = lemma_ok;
  r.details["complement_permutation"] = complements_ok;
  r.pass = det == expected && det != 0 && interior_mismatch == 0 && lemma_ok && complements_ok;
  return r;
}

Report basterfield_kelly_check(const RankedLattice& l) {
  if (!is_geometric(l)) throw Error(ErrorCode::Precondition, "Basterfield-Kelly check needs a geometric lattice");
  const std::size_t d = l.height();
  const auto w = whitney_numbers(l);
  const std::size_t w1 = d >= 1 ? w[1] : 1;
  const std::size_t wd1 = d >= 1 ? w[d - 1] : 1;
  const bool dedekind = is_modular_lattice(l);
  const bool lines = hyperplanes_meet_all_lines(l);
  bool every = true;
  for (std::size_t x = 0; x < l.size() && every; ++x) every = is_modular_element_unchecked(l, x);

  Report r;
  r.identity = "basterfield_kelly";
  r.lhs = w1;
  r.rhs = wd1;
  r.details["modular_dedekind"] = dedekind;
  r.details["hyperplanes_meet_lines"] = lines;
  r.details["every_element_modular"] = every;
  bool inverse_ok = true;
  const std::size_t n = l.size();
  if (n <= 128) {
    const auto& p = l.poset();
    RatMatrix g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (l.join(a, b) == l.one()) g(a, b) = 1;
    auto inv = inverse(g);
    const auto mu = mobius_matrix(p);
    inverse_ok = inv.has_value();
    for (std::size_t a = 0; a < n && inverse_ok; ++a)
      for (std::size_t b = 0; b < n && inverse_ok; ++b) {
        Rational expected = 0;
        for_each_bit(p.down_set(l.meet(a, b)),
                     [&](std::size_t x) { expected += Rational(mu(x, a) * mu(x, b)) / Rational(mu(x, l.one())); });
        if (l.meet(a, b) == l.zero()) {
          Rational special = Rational(mu(0, a) * mu(0, b)) / Rational(mu(0, l.one()));
          inverse_ok = special != 0 && special == expected;
        }
        inverse_ok = inverse_ok && (*inv)(a, b) == expected;
        if (!inverse_ok) r.witnesses.push_back(Json::array({l.label(a), l.label(b)}));
      }
    r.details["gram_inverse_formula"] = inverse_ok;
  }
  const bool consistent = (w1 == wd1) == dedekind && dedekind == lines && dedekind == every;
  r.details["consistent"] = consistent;
  r.pass = w1 <= wd1 && consistent && inverse_ok;
  return r;
}

Report kung_check(const RankedLattice& l, std::size_t k) {
  if (!is_geometric(l)) throw Error(ErrorCode::Precondition, "Kung check needs a geometric lattice");
  const std::size_t d = l.height();
  if (k > d) throw Error(ErrorCode::InvalidArgument, "Kung check: k exceeds the height");
  const auto& p = l.poset();
  std::vector<std::size_t> a_set, b_set;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.rank(x) <= k) a_set.push_back(x);
    if (l.rank(x) + k >= d) b_set.push_back(x);
  }
  const auto mu1 = mobius_column(p, l.one());
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.rank(x) + k >= d) continue;
    if (mu1[x] == 0) throw Error(ErrorCode::Precondition, "Kung: mu('" + l.label(x) + "', 1) = 0");
    for (auto a : a_set)
      if (l.join(a, x) == l.one())
        throw Error(ErrorCode::Precondition,
                    "Kung: '" + l.label(a) + "' v '" + l.label(x) + "' = 1 for x outside B");
  }
  auto zeta_block = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix z(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) z(i, j) = l.leq(rows[i], cols[j]) ? 1 : 0;
    return z;
  };
  auto injection = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    std::vector<std::vector<std::size_t>> adj(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (l.leq(rows[i], cols[j])) adj[i].push_back(j);
    return saturating_matching(cols.size(), adj).has_value();
  };
  Report r;
  r.identity = "kung";
  const std::size_t rk = rank(zeta_block(a_set, b_set));
  r.lhs = rk;
  r.rhs = a_set.size();
  const bool inj = injection(a_set, b_set);
  r.details["k"] = k;
  r.details["A"] = a_set.size();
  r.details["B"] = b_set.size();
  r.details["injection"] = inj;
  r.pass = rk == a_set.size() && inj;

  if (is_modular_lattice(l)) {
    const auto j_set = join_irreducibles(l), m_set = meet_irreducibles(l);
    bool hyp = true;
    std::vector<bool> in_m(l.size(), false);
    for (auto x : m_set) in_m[x] = true;
    for (std::size_t x = 0; x < l.size() && hyp; ++x) {
      if (in_m[x]) continue;
      const auto star = l.join_all(p.upper_covers(x));
      hyp = mobius(p, x, star) != 0;
      for (auto a : j_set) hyp = hyp && l.join(a, x) != star;
    }
    const std::size_t jm_rank = rank(zeta_block(j_set, m_set));
    r.details["J"] = j_set.size();
    r.details["M"] = m_set.size();
    r.details["JM_hypotheses"] = hyp;
    r.details["JM_rank"] = jm_rank;
    r.pass = r.pass && hyp && j_set.size() == m_set.size() && jm_rank == j_set.size();
  }
  return r;
}

PointDeletion point_deletion(const Lattice& l, std::size_t pt) {
  const auto pts = atoms(l);
  if (std::find(pts.begin(), pts.end(), pt) == pts.end())
    throw Error(ErrorCode::InvalidArgument, "point deletion: '" + l.label(pt) + "' is not an atom");
  if (!is_point_lattice(l)) throw Error(ErrorCode::Precondition, "point deletion needs a point lattice");
  const auto& p = l.poset();
  const std::size_t n = l.size();
  std::vector<std::size_t> f(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t j = l.zero();
    for (auto q : pts)
      if (q != pt && l.leq(q, a)) j = l.join(j, q);
    f[a] = j;
  }
  bool map_ok = true;
  for (std::size_t a = 0; a < n; ++a) {
    map_ok = map_ok && l.leq(f[a], a) && f[f[a]] == f[a];
    for_each_bit(p.up_set(a), [&](std::size_t b) { map_ok = map_ok && l.leq(f[a], f[b]); });
  }
  Poset::Bits fixed(n);
  for (std::size_t a = 0; a < n; ++a)
    if (f[a] == a) fixed.set(a);

  PointDeletion out;
  out.coloop = f[l.one()] != l.one();
  out.deletion = Lattice::from_poset(p.induced(fixed));

  const Integer mu_l = mobius_row(p, l.zero())[l.one()];
  const Integer mu_p1 = mobius_row(p, pt)[l.one()];
  const Integer mu_del = mobius_row(out.deletion.poset(), 0)[out.deletion.one()];
  const Integer rhs = out.coloop ? Integer(-mu_p1) : Integer(mu_del - mu_p1);

  // Fixed points away from 0 and 1 form a retract of L' minus p.
  Poset::Bits m_prime = fixed;
  m_prime.reset(l.zero());
  m_prime.reset(l.one());
  Poset::Bits l_minus_p = l.proper_part();
  l_minus_p.reset(pt);
  const Integer mu_mprime = mobius_number(p, m_prime);
  const Integer mu_lp = mobius_number(p, l_minus_p);

  Report& r = out.report;
  r.identity = "point_deletion";
  r.lhs = to_json(mu_l);
  r.rhs = to_json(rhs);
  r.details["point"] = l.label(pt);
  r.details["coloop"] = out.coloop;
  r.details["mu_deletion"] = to_json(mu_del);
  r.details["mu_p_1"] = to_json(mu_p1);
  r.details["retract_mobius"] = Json::array({to_json(mu_mprime), to_json(mu_lp)});
  r.details["map_order_preserving_decreasing_idempotent"] = map_ok;
  bool retract_ok = mu_mprime == mu_lp && (!out.coloop || mu_mprime == 0);
  r.pass = mu_l == rhs && map_ok && retract_ok;
  return out;
}

}  // namespace mobiuslab
