#include "core/inversion.hpp"

#include "core/incidence.hpp"
#include "core/lattice.hpp"

namespace mobiuslab {

namespace {

void check_length(const Poset& p, const PosetFunction& f) {
  if (f.size() != p.size())
    throw Error(ErrorCode::InvalidArgument, "function has " + std::to_string(f.size()) +
                                                " values for a poset of " + std::to_string(p.size()));
}

}  // namespace

PosetFunction up_sums(const Poset& p, const PosetFunction& f) {
  check_length(p, f);
  PosetFunction g(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) for_each_bit(p.up_set(x), [&](std::size_t y) { g[x] += f[y]; });
  return g;
}

PosetFunction down_sums(const Poset& p, const PosetFunction& f) {
  check_length(p, f);
  PosetFunction g(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) for_each_bit(p.down_set(x), [&](std::size_t y) { g[x] += f[y]; });
  return g;
}

PosetFunction invert_up(const Poset& p, const PosetFunction& g) {
  check_length(p, g);
  PosetFunction f(p.size());
  for (std::size_t z = 0; z < p.size(); ++z) {
    auto mu = mobius_row(p, z);
    for_each_bit(p.up_set(z), [&](std::size_t y) { f[z] += mu[y] * g[y]; });
  }
  return f;
}

PosetFunction invert_down(const Poset& p, const PosetFunction& g) {
  check_length(p, g);
  PosetFunction f(p.size());
  for (std::size_t z = 0; z < p.size(); ++z) {
    auto mu = mobius_column(p, z);
    for_each_bit(p.down_set(z), [&](std::size_t y) { f[z] += mu[y] * g[y]; });
  }
  return f;
}

Integer derangements(unsigned n) {
  if (n > 12) throw Error(ErrorCode::InvalidArgument, "derangements: n must be at most 12");
  // Subsets of {0..n-1} as bitmasks ordered by inclusion; the Mobius row from
  // the empty set is computed by the generic recursion, not the closed form.
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels(size);
  std::vector<Poset::Bits> up(size, Poset::Bits(size));
  for (std::size_t s = 0; s < size; ++s) {
    labels[s] = std::to_string(s);
    for (std::size_t t = s;; t = (t + 1) | s) {
      up[s].set(t);
      if (t == size - 1) break;
    }
  }
  Poset b = Poset::from_trusted_relation(std::move(labels), std::move(up));
  auto mu = mobius_row(b, 0);
  Integer total;
  for (std::size_t s = 0; s < size; ++s) {
    auto k = static_cast<unsigned>(__builtin_popcountll(static_cast<unsigned long long>(s)));
    total += mu[b.index_of(std::to_string(s))] * factorial(n - k);
  }
  return total;
}

Integer derangements_series(unsigned n) {
  // n! sum_{k} (-1)^k / k! = sum_k (-1)^k n!/k!
  Integer total;
  for (unsigned k = 0; k <= n; ++k) {
    Integer term = factorial(n) / factorial(k);
    total += (k % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

LindstromWilf lindstrom_wilf_det(const Poset& p, const PosetFunction& f) {
  check_length(p, f);
  const std::size_t n = p.size();
  LindstromWilf out;
  out.gram = IntMatrix(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      Integer s;
      for_each_bit(p.up_set(x) & p.up_set(y), [&](std::size_t z) { s += f[z]; });
      out.gram(x, y) = s;
      out.gram(y, x) = s;
    }
  out.det = determinant(out.gram);
  out.product = 1;
  for (const auto& v : f) out.product *= v;
  out.pass = out.det == out.product;
  return out;
}

LatticeGramRecovery lattice_gram_recovery(const Lattice& l, const IntMatrix& gram) {
  const auto& p = l.poset();
  const std::size_t n = p.size();
  if (gram.rows() != n || gram.cols() != n) throw Error(ErrorCode::InvalidArgument, "gram matrix has wrong size");
  LatticeGramRecovery out;
  out.f.assign(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    auto mu = mobius_row(p, y);
    for_each_bit(p.up_set(y), [&](std::size_t z) { out.f[y] += mu[z] * gram(z, z); });
  }
  // On a lattice the common upper bounds of x and y form the up-set of x v y.
  auto sums = up_sums(p, out.f);
  out.pass = true;
  for (std::size_t x = 0; x < n && out.pass; ++x)
    for (std::size_t y = 0; y < n && out.pass; ++y) out.pass = gram(x, y) == sums[l.join(x, y)];
  return out;
}

}  // namespace mobiuslab
