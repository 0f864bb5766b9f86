#include "core/matroid.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "core/finite_field.hpp"
#include "core/incidence.hpp"
#include "core/instances.hpp"
#include "core/size_guard.hpp"

namespace mobiuslab {

namespace {

using Set = AtomMatroid::Set;

int popcount(Set s) { return __builtin_popcountll(s); }

}  // namespace

AtomMatroid::AtomMatroid(const RankedLattice& l) : l_(&l), atoms_(mobiuslab::atoms(l)) {
  if (atoms_.size() > 28)
    throw Error(ErrorCode::SizeGuard, "atom matroid: " + std::to_string(atoms_.size()) + " atoms exceeds 28");
}

std::size_t AtomMatroid::span(Set s) const {
  std::size_t j = l_->zero();
  for (std::size_t i = 0; s; ++i, s >>= 1)
    if (s & 1U) j = l_->join(j, atoms_[i]);
  return j;
}

bool AtomMatroid::independent(Set s) const { return rank(s) == static_cast<std::size_t>(popcount(s)); }

std::vector<Set> independents(const AtomMatroid& m) {
  // Sets are grown by atoms above their largest member, so each independent
  // set is produced once, from its independent prefix.
  std::vector<Set> out{0};
  std::vector<std::size_t> spans{m.lattice().zero()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Set s = out[i];
    const std::size_t start = s ? static_cast<std::size_t>(64 - __builtin_clzll(s)) : 0;
    for (std::size_t a = start; a < m.size(); ++a) {
      const std::size_t j = m.lattice().join(spans[i], m.atoms()[a]);
      if (m.lattice().rank(j) == static_cast<std::size_t>(popcount(s)) + 1) {
        out.push_back(s | (Set{1} << a));
        spans.push_back(j);
      }
    }
    check_size("independent sets", static_cast<double>(out.size()), 5000000);
  }
  return out;
}

std::vector<Set> circuits(const AtomMatroid& m) {
  std::vector<Set> out;
  for (Set s : independents(m)) {
    const std::size_t start = s ? static_cast<std::size_t>(64 - __builtin_clzll(s)) : 0;
    for (std::size_t a = start; a < m.size(); ++a) {
      const Set c = s | (Set{1} << a);
      if (m.independent(c)) continue;
      bool minimal = true;
      for (Set rest = s; rest && minimal; rest &= rest - 1) minimal = m.independent(c & ~(rest & -rest));
      if (minimal) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Set> broken_circuits(const AtomMatroid& m, const std::vector<std::size_t>& order) {
  if (order.size() != m.size()) throw Error(ErrorCode::InvalidArgument, "atom order has the wrong length");
  std::vector<std::size_t> position(m.size(), m.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= m.size() || position[order[i]] != m.size())
      throw Error(ErrorCode::InvalidArgument, "atom order is not a permutation");
    position[order[i]] = i;
  }
  std::set<Set> out;
  for (Set c : circuits(m)) {
    std::size_t least = m.size();
    for (std::size_t a = 0; a < m.size(); ++a)
      if ((c >> a & 1U) && (least == m.size() || position[a] < position[least])) least = a;
    out.insert(c & ~(Set{1} << least));
  }
  return {out.begin(), out.end()};
}

namespace {

std::vector<Set> nbc_sets(const AtomMatroid& m, const std::vector<std::size_t>& order) {
  const auto bcs = broken_circuits(m, order);
  std::vector<Set> out;
  for (Set s : independents(m)) {
    bool clean = true;
    for (Set b : bcs)
      if ((b & s) == b) {
        clean = false;
        break;
      }
    if (clean) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Integer> nbc_counts(const AtomMatroid& m, const std::vector<std::size_t>& order) {
  std::vector<Integer> counts(m.lattice().height() + 1);
  for (Set s : nbc_sets(m, order)) ++counts[static_cast<std::size_t>(popcount(s))];
  return counts;
}

bool nbc_complex_is_pure(const AtomMatroid& m, const std::vector<std::size_t>& order) {
  const auto sets = nbc_sets(m, order);
  const std::set<Set> all(sets.begin(), sets.end());
  const auto d = m.lattice().height();
  for (Set s : sets) {
    if (static_cast<std::size_t>(popcount(s)) == d) continue;
    bool extends = false;
    for (std::size_t a = 0; a < m.size() && !extends; ++a)
      extends = !(s >> a & 1U) && all.count(s | (Set{1} << a));
    if (!extends) return false;
  }
  return true;
}

bool rank_axioms_hold(const AtomMatroid& m) {
  if (m.size() > 12) throw Error(ErrorCode::SizeGuard, "rank axiom check: at most 12 atoms");
  const std::size_t count = std::size_t{1} << m.size();
  std::vector<std::size_t> r(count);
  for (Set s = 0; s < count; ++s) r[s] = m.rank(s);
  if (r[0] != 0) return false;
  for (std::size_t a = 0; a < m.size(); ++a)
    if (r[Set{1} << a] != 1) return false;
  for (Set s = 0; s < count; ++s)
    for (std::size_t a = 0; a < m.size(); ++a)
      if (r[s | (Set{1} << a)] < r[s]) return false;
  for (Set t = 0; t < count; ++t)
    for (Set u = 0; u < count; ++u)
      if (r[t] + r[u] < r[t | u] + r[t & u]) return false;
  return true;
}

std::vector<Integer> whitney_rank_sums(const RankedLattice& l) {
  std::vector<Integer> w(l.height() + 1);
  const auto mu = mobius_row(l.poset(), l.zero());
  for (std::size_t x = 0; x < l.size(); ++x) w[l.rank(x)] += mu[x];
  return w;
}

IntPolynomial characteristic_polynomial(const RankedLattice& l) {
  const auto w = whitney_rank_sums(l);
  const std::size_t d = l.height();
  std::vector<Integer> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[d - k] = w[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial chromatic_polynomial(const Graph& g) {
  if (g.vertex_count() == 0) return IntPolynomial({Integer(1)});
  const auto l = contraction_lattice(g);
  const auto w = whitney_rank_sums(l);
  const std::size_t n = g.vertex_count();
  std::vector<Integer> c(n + 1);
  for (std::size_t k = 0; k < w.size(); ++k) c[n - k] = w[k];
  return IntPolynomial(std::move(c));
}

Integer stirling_first_unsigned(unsigned n, unsigned k) {
  if (k > n || n > 12) throw Error(ErrorCode::InvalidArgument, "Stirling numbers need 0 <= k <= n <= 12");
  IntPolynomial p({Integer(1)});
  for (unsigned i = 0; i < n; ++i) p = p * IntPolynomial({Integer(-static_cast<long>(i)), Integer(1)});
  return abs(p.coefficient(k));
}

namespace {

struct Columns {
  FiniteField field;
  std::size_t rows;
  std::vector<std::vector<unsigned>> cols;

  std::size_t rank_of(std::uint64_t mask) const {
    std::vector<std::vector<unsigned>> m;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (mask >> j & 1U) m.push_back(cols[j]);
    std::size_t r = 0;
    for (std::size_t c = 0; c < rows && r < m.size(); ++c) {
      std::size_t piv = r;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[r], m[piv]);
      const unsigned inv = field.inv(m[r][c]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || m[i][c] == 0) continue;
        const unsigned factor = field.mul(m[i][c], inv);
        for (std::size_t k = 0; k < rows; ++k) m[i][k] = field.sub(m[i][k], field.mul(factor, m[r][k]));
      }
      ++r;
    }
    return r;
  }
};

Columns read_columns(const std::vector<std::vector<unsigned>>& g, unsigned q) {
  if (g.empty() || g[0].empty()) throw Error(ErrorCode::InvalidArgument, "generator matrix is empty");
  const std::size_t rows = g.size(), n = g[0].size();
  if (n > 12) throw Error(ErrorCode::SizeGuard, "generator matrix: at most 12 columns");
  Columns c{FiniteField(q), rows, std::vector<std::vector<unsigned>>(n, std::vector<unsigned>(rows))};
  for (std::size_t i = 0; i < rows; ++i) {
    if (g[i].size() != n) throw Error(ErrorCode::InvalidArgument, "generator matrix rows differ in length");
    for (std::size_t j = 0; j < n; ++j) {
      if (g[i][j] >= q) throw Error(ErrorCode::InvalidArgument, "matrix entry outside GF(q)");
      c.cols[j][i] = g[i][j];
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (std::all_of(c.cols[j].begin(), c.cols[j].end(), [](unsigned v) { return v == 0; }))
      throw Error(ErrorCode::InvalidArgument, "column " + std::to_string(j) + " is zero");
  return c;
}

}  // namespace

RankedLattice column_flats(const std::vector<std::vector<unsigned>>& generator, unsigned q) {
  const auto cols = read_columns(generator, q);
  const std::size_t n = cols.cols.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::size_t> r(count);
  for (std::uint64_t s = 0; s < count; ++s) r[s] = cols.rank_of(s);
  std::set<std::pair<std::size_t, std::uint64_t>> flats;
  for (std::uint64_t s = 0; s < count; ++s) {
    std::uint64_t closure = s;
    for (std::size_t j = 0; j < n; ++j)
      if (r[s | (std::uint64_t{1} << j)] == r[s]) closure |= std::uint64_t{1} << j;
    flats.emplace(r[closure], closure);
  }
  std::vector<std::uint64_t> masks;
  std::vector<std::string> labels;
  for (const auto& [rank, mask] : flats) {
    masks.push_back(mask);
    std::string l = "{";
    bool first = true;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1U) {
        l += (first ? "" : ",") + std::to_string(j);
        first = false;
      }
    labels.push_back(l + "}");
  }
  const std::size_t m = masks.size();
  std::vector<Poset::Bits> up(m, Poset::Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if ((masks[i] & masks[j]) == masks[i]) up[i].set(j);
  return RankedLattice::from_poset(Poset::from_trusted_relation(std::move(labels), std::move(up)));
}

Report codeword_weight_check(const std::vector<std::vector<unsigned>>& generator, unsigned q, unsigned t) {
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");
  const auto cols = read_columns(generator, q);
  const std::size_t rows = cols.rows, n = cols.cols.size();
  const double vectors_d = std::pow(static_cast<double>(q), static_cast<double>(rows));
  if (std::pow(vectors_d, static_cast<double>(t)) > 1e7)
    throw Error(ErrorCode::SizeGuard, "codeword check: q^((d+1)t) exceeds 10^7");
  const auto vectors = static_cast<std::size_t>(vectors_d);

  // Every codeword a^T G, as the tuple of its coordinates encoded base q.
  std::vector<std::uint64_t> word_of(vectors);
  std::vector<unsigned> a(rows, 0);
  std::size_t full_weight_vectors = 0;
  for (std::size_t v = 0; v < vectors; ++v) {
    std::uint64_t code = 0;
    bool full = true;
    for (std::size_t j = 0; j < n; ++j) {
      unsigned s = 0;
      for (std::size_t i = 0; i < rows; ++i) s = cols.field.add(s, cols.field.mul(a[i], cols.cols[j][i]));
      full = full && s != 0;
      code = code * q + s;
    }
    word_of[v] = code;
    if (full) ++full_weight_vectors;
    std::size_t pos = 0;
    while (pos < rows && ++a[pos] == q) a[pos++] = 0;
  }
  std::set<std::uint64_t> words(word_of.begin(), word_of.end());
  std::vector<std::uint64_t> zero_sets;
  std::size_t full_words = 0;
  for (auto w : words) {
    std::uint64_t zeros = 0;
    std::uint64_t rest = w;
    for (std::size_t j = n; j-- > 0;) {
      if (rest % q == 0) zeros |= std::uint64_t{1} << j;
      rest /= q;
    }
    zero_sets.push_back(zeros);
    if (zeros == 0) ++full_words;
  }

  const auto flats = column_flats(generator, q);
  const auto f = characteristic_polynomial(flats);
  const std::size_t big_r = flats.height();
  Report r;
  r.identity = "codeword_weight";
  r.lhs = full_words;
  r.rhs = to_json(f(Integer(q)));
  bool pass = Integer(static_cast<unsigned long>(full_words)) == f(Integer(q));
  const Integer kernel = power(Integer(q), rows - big_r);
  r.details["characteristic_polynomial"] = f.to_json();
  r.details["lattice_rank"] = big_r;
  r.details["codewords"] = words.size();
  r.details["full_weight_vectors"] = full_weight_vectors;
  r.details["vector_count_matches"] = Integer(static_cast<unsigned long>(full_weight_vectors)) == kernel * f(Integer(q));
  pass = pass && r.details["vector_count_matches"].get<bool>();
  if (t > 1) {
    // Tuples of codewords whose zero sets have empty intersection.
    const std::size_t w = zero_sets.size();
    std::vector<std::size_t> idx(t, 0);
    std::size_t tuples = 0;
    while (true) {
      std::uint64_t common = ~std::uint64_t{0};
      for (auto i : idx) common &= zero_sets[i];
      if ((common & ((std::uint64_t{1} << n) - 1)) == 0) ++tuples;
      std::size_t pos = 0;
      while (pos < t && ++idx[pos] == w) idx[pos++] = 0;
      if (pos == t) break;
    }
    const Integer expected = f(power(Integer(q), t));
    r.details["t"] = t;
    r.details["tuples"] = tuples;
    r.details["tuples_expected"] = to_json(expected);
    pass = pass && Integer(static_cast<unsigned long>(tuples)) == expected;
  }
  r.pass = pass;
  return r;
}

}  // namespace mobiuslab
