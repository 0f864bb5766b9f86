#include "core/incidence.hpp"

#include <algorithm>

namespace mobiuslab {

IntMatrix zeta_matrix(const Poset& p) {
  const std::size_t n = p.size();
  IntMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i) for_each_bit(p.up_set(i), [&](std::size_t j) { z(i, j) = 1; });
  return z;
}

std::vector<Integer> mobius_row(const Poset& p, std::size_t a) {
  const std::size_t n = p.size();
  std::vector<Integer> mu(n);
  const auto& up = p.up_set(a);
  Poset::Bits open(n);
  for_each_bit(up, [&](std::size_t b) {
    if (b == a) {
      mu[b] = 1;
      return;
    }
    // Indices follow a linear extension, so every x in [a,b) precedes b.
    open = up & p.down_set(b);
    open.reset(b);
    Integer s;
    for_each_bit(open, [&](std::size_t x) { s += mu[x]; });
    mu[b] = -s;
  });
  return mu;
}

std::vector<Integer> mobius_column(const Poset& p, std::size_t b) {
  const std::size_t n = p.size();
  std::vector<Integer> mu(n);
  const auto& down = p.down_set(b);
  const auto members = elements_of(down);
  Poset::Bits open(n);
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    const std::size_t a = *it;
    if (a == b) {
      mu[a] = 1;
      continue;
    }
    open = down & p.up_set(a);
    open.reset(a);
    Integer s;
    for_each_bit(open, [&](std::size_t y) { s += mu[y]; });
    mu[a] = -s;
  }
  return mu;
}

IntMatrix mobius_matrix(const Poset& p) {
  const std::size_t n = p.size();
  IntMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    auto row = mobius_row(p, a);
    for_each_bit(p.up_set(a), [&](std::size_t b) { m(a, b) = std::move(row[b]); });
  }
  return m;
}

Integer mobius(const Poset& p, std::size_t a, std::size_t b) {
  if (a >= p.size() || b >= p.size()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  if (!p.leq(a, b)) return 0;
  return mobius_row(p, a)[b];
}

Integer mobius(const Poset& p, std::string_view a, std::string_view b) {
  return mobius(p, p.index_of(a), p.index_of(b));
}

namespace {

template <typename Visit>
void walk_chains(const Poset& p, std::size_t x, std::size_t b, long length, Visit& visit) {
  if (x == b) {
    visit(length);
    return;
  }
  Poset::Bits next = p.up_set(x) & p.down_set(b);
  next.reset(x);
  for_each_bit(next, [&](std::size_t y) { walk_chains(p, y, b, length + 1, visit); });
}

}  // namespace

Integer mobius_by_chains(const Poset& p, std::size_t a, std::size_t b) {
  if (!p.leq(a, b))
    throw Error(ErrorCode::InvalidArgument,
                "chains: '" + p.label(a) + "' is not below '" + p.label(b) + "'");
  Integer total;
  auto visit = [&](long length) { total += (length % 2 == 0) ? 1 : -1; };
  walk_chains(p, a, b, 0, visit);
  return total;
}

Integer count_chains(const Poset& p, std::size_t a, std::size_t b) {
  if (!p.leq(a, b)) return 0;
  Integer total;
  auto visit = [&](long) { ++total; };
  walk_chains(p, a, b, 0, visit);
  return total;
}

IntMatrix strict_zeta_power(const Poset& p, unsigned m) {
  const std::size_t n = p.size();
  IntMatrix y = zeta_matrix(p) - IntMatrix::identity(n);
  IntMatrix result = IntMatrix::identity(n);
  for (unsigned k = 0; k < m; ++k) result = result * y;
  return result;
}

IntMatrix zeta_power(const Poset& p, unsigned m) {
  IntMatrix base = zeta_matrix(p);
  IntMatrix result = IntMatrix::identity(p.size());
  while (m > 0) {
    if (m & 1U) result = result * base;
    m >>= 1U;
    if (m > 0) base = base * base;
  }
  return result;
}

namespace {

// Lagrange interpolation through (x_k, y_k), expanded to ascending coefficients.
std::vector<Rational> interpolate(const std::vector<unsigned>& xs, const std::vector<Integer>& ys) {
  const std::size_t k = xs.size();
  std::vector<Rational> coeffs(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(static_cast<long>(xs[i]) - static_cast<long>(xs[j]));
    }
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * Rational(ys[i]) / denom;
  }
  return coeffs;
}

Rational evaluate(const std::vector<Rational>& coeffs, unsigned x) {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * Rational(x) + *it;
  return v;
}

}  // namespace

ZetaPolyCheck zeta_power_poly_check(const Poset& p, std::size_t i, std::size_t j,
                                    const std::vector<unsigned>& ms) {
  if (i >= p.size() || j >= p.size()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  std::vector<unsigned> distinct;
  for (auto m : ms)
    if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
  const std::size_t needed = static_cast<std::size_t>(std::max(0L, p.longest_chain_length())) + 1;
  if (distinct.size() < needed)
    throw Error(ErrorCode::InvalidArgument, "need at least " + std::to_string(needed) +
                                                " distinct values of m, got " + std::to_string(distinct.size()));
  ZetaPolyCheck out;
  out.sampled = distinct;
  unsigned top = *std::max_element(distinct.begin(), distinct.end());
  out.held_out = {top + 1, top + 2};
  for (auto m : distinct) out.values.push_back(zeta_power(p, m)(i, j));
  std::vector<unsigned> xs(distinct.begin(), distinct.begin() + static_cast<long>(needed));
  std::vector<Integer> ys(out.values.begin(), out.values.begin() + static_cast<long>(needed));
  out.coefficients = interpolate(xs, ys);
  while (out.coefficients.size() > 1 && out.coefficients.back() == 0) out.coefficients.pop_back();
  out.pass = true;
  for (std::size_t k = needed; k < distinct.size(); ++k)
    out.pass = out.pass && evaluate(out.coefficients, distinct[k]) == Rational(out.values[k]);
  for (auto m : out.held_out) {
    Integer actual = zeta_power(p, m)(i, j);
    Rational guess = evaluate(out.coefficients, m);
    out.predicted.push_back(guess.get_den() == 1 ? Integer(guess.get_num()) : Integer(0));
    out.values.push_back(actual);
    out.pass = out.pass && guess == Rational(actual);
  }
  return out;
}

Integer mobius_number(const Poset& p) { return mobius_number(p, p.full_bits()); }

Integer mobius_number(const Poset& p, const Poset::Bits& subset) {
  // m(x) = mu(0^, x) in the poset with bounds adjoined.
  std::vector<Integer> m(p.size());
  Integer total = 1;
  Poset::Bits below(p.size());
  for_each_bit(subset, [&](std::size_t x) {
    below = p.down_set(x) & subset;
    below.reset(x);
    Integer s = 1;
    for_each_bit(below, [&](std::size_t y) { s += m[y]; });
    m[x] = -s;
    total += m[x];
  });
  return -total;
}

}  // namespace mobiuslab
