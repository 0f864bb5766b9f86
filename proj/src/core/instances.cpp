#include "core/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "core/finite_field.hpp"
#include "core/size_guard.hpp"

namespace mobiuslab {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

// Integer threshold on 53 random bits, so density 1 always succeeds and
// density 0 never does.
std::uint64_t threshold(double density) {
  if (!(density >= 0.0 && density <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "density must lie in [0, 1]");
  return static_cast<std::uint64_t>(std::ldexp(density, 53));
}

bool coin(std::mt19937_64& rng, std::uint64_t limit) { return (rng() >> 11) < limit; }

std::vector<std::string> numbered(std::size_t n, std::size_t first = 0) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(first + i);
  return out;
}

std::string element_list(const std::vector<std::size_t>& xs, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (n > 9 && i > 0) s += ",";
    s += std::to_string(xs[i] + 1);
  }
  return s;
}

Integer bell_number(std::size_t n) {
  std::vector<Integer> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// Restricted growth strings of length n, optionally filtered.
template <typename Keep>
std::vector<std::vector<std::uint8_t>> growth_strings(std::size_t n, Keep keep) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint8_t max) -> void {
    if (i == n) {
      if (keep(a)) out.push_back(a);
      return;
    }
    for (std::uint8_t v = 0; v <= static_cast<std::uint8_t>(max + 1); ++v) {
      a[i] = v;
      self(self, i + 1, std::max(max, v));
    }
  };
  if (n == 0) {
    if (keep(a)) out.push_back(a);
    return out;
  }
  a[0] = 0;
  rec(rec, 1, 0);
  return out;
}

std::size_t block_count(const std::vector<std::uint8_t>& a) {
  return a.empty() ? 0 : static_cast<std::size_t>(*std::max_element(a.begin(), a.end())) + 1;
}

std::string partition_label(const std::vector<std::uint8_t>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> blocks(block_count(a));
  for (std::size_t i = 0; i < n; ++i) blocks[a[i]].push_back(i);
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) s += (b ? "|" : "") + element_list(blocks[b], n);
  return s;
}

// Lattice of partitions given as growth strings, ordered by refinement.
RankedLattice refinement_lattice(std::vector<std::vector<std::uint8_t>> parts) {
  std::vector<std::pair<std::size_t, std::string>> keys;
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> labels(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) labels[i] = partition_label(parts[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto bx = block_count(parts[x]), by = block_count(parts[y]);
    if (bx != by) return bx > by;
    return labels[x] < labels[y];
  });
  const std::size_t m = parts.size();
  std::vector<std::vector<std::uint8_t>> sorted(m);
  std::vector<std::string> sorted_labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    sorted[i] = std::move(parts[order[i]]);
    sorted_labels[i] = std::move(labels[order[i]]);
  }
  const std::size_t n = m ? sorted[0].size() : 0;
  std::vector<Poset::Bits> up(m, Poset::Bits(m));
  std::vector<std::size_t> first(n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = sorted[i];
    const auto blocks_a = block_count(a);
    std::fill(first.begin(), first.end(), n);
    for (std::size_t v = 0; v < n; ++v)
      if (first[a[v]] == n) first[a[v]] = v;
    for (std::size_t j = i; j < m; ++j) {
      const auto& b = sorted[j];
      if (block_count(b) > blocks_a) continue;
      bool finer = true;
      for (std::size_t v = 0; v < n && finer; ++v) finer = b[v] == b[first[a[v]]];
      if (finer) up[i].set(j);
    }
  }
  return RankedLattice::from_poset(Poset::from_trusted_relation(std::move(sorted_labels), std::move(up)));
}

}  // namespace

Poset chain(std::size_t n) {
  auto labels = numbered(n + 1);
  std::vector<Poset::Bits> up(n + 1, Poset::Bits(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) up[i].set(j);
  return Poset::from_trusted_relation(std::move(labels), std::move(up));
}

std::string subset_label(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) xs.push_back(i);
  return element_list(xs, n);
}

RankedLattice boolean_lattice(std::size_t n) {
  if (n > 16) throw Error(ErrorCode::SizeGuard, "boolean lattice: n must be at most 16");
  check_size("boolean lattice", std::ldexp(1.0, static_cast<int>(n)));
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels(size);
  std::vector<Poset::Bits> up(size, Poset::Bits(size));
  for (std::size_t s = 0; s < size; ++s) {
    labels[s] = subset_label(s, n);
    for (std::size_t t = s;; t = (t + 1) | s) {
      up[s].set(t);
      if (t == size - 1) break;
    }
  }
  return RankedLattice::from_poset(Poset::from_trusted_relation(std::move(labels), std::move(up)));
}

Lattice divisor_lattice(std::uint64_t n) {
  if (n == 0 || n > 1000000) throw Error(ErrorCode::InvalidArgument, "divisor lattice: n must lie in 1..1000000");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  const std::size_t m = divs.size();
  std::vector<std::string> labels(m);
  std::vector<Poset::Bits> up(m, Poset::Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = std::to_string(divs[i]);
    for (std::size_t j = i; j < m; ++j)
      if (divs[j] % divs[i] == 0) up[i].set(j);
  }
  return Lattice::from_poset(Poset::from_trusted_relation(std::move(labels), std::move(up)));
}

Integer gaussian_binomial(unsigned q, unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= power(q, n - i) - 1;
    den *= power(q, i + 1) - 1;
  }
  return num / den;
}

RankedLattice subspace_lattice(unsigned q, std::size_t n) {
  FiniteField field(q);
  Integer total;
  for (unsigned k = 0; k <= n; ++k) total += gaussian_binomial(q, static_cast<unsigned>(n), k);
  check_size("subspace lattice", total.get_d());
  check_size("subspace lattice vectors", std::pow(static_cast<double>(q), static_cast<double>(n)), 1000000);
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < n; ++i) vectors *= q;

  std::vector<std::string> labels;
  std::vector<Poset::Bits> spans;
  auto encode = [&](const std::vector<unsigned>& v) {
    std::size_t code = 0;
    for (std::size_t j = 0; j < n; ++j) code = code * q + v[j];
    return code;
  };
  for (std::size_t k = 0; k <= n; ++k) {
    // Pivot columns as a k-subset of 0..n-1, in lexicographic order.
    std::vector<std::size_t> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = pivots[i] + 1; j < n; ++j)
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(i, j);
      std::vector<unsigned> values(free.size(), 0);
      while (true) {
        std::vector<std::vector<unsigned>> rows(k, std::vector<unsigned>(n, 0));
        for (std::size_t i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = values[f];
        std::string label;
        for (std::size_t i = 0; i < k; ++i) {
          if (i) label += "|";
          for (auto v : rows[i]) label += static_cast<char>('0' + v);
        }
        labels.push_back(k == 0 ? "0" : label);
        Poset::Bits span(vectors);
        std::vector<unsigned> coeff(k, 0);
        while (true) {
          std::vector<unsigned> v(n, 0);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] = field.add(v[j], field.mul(coeff[i], rows[i][j]));
          span.set(encode(v));
          std::size_t pos = 0;
          while (pos < k && ++coeff[pos] == q) coeff[pos++] = 0;
          if (pos == k) break;
        }
        spans.push_back(std::move(span));
        std::size_t pos = 0;
        while (pos < free.size() && ++values[pos] == q) values[pos++] = 0;
        if (pos == free.size()) break;
      }
      // Next pivot combination.
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  const std::size_t m = labels.size();
  std::vector<Poset::Bits> up(m, Poset::Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (spans[i].is_subset_of(spans[j])) up[i].set(j);
  return RankedLattice::from_poset(Poset::from_trusted_relation(std::move(labels), std::move(up)));
}

RankedLattice partition_lattice(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "partition lattice needs n >= 1");
  check_size("partition lattice", bell_number(n).get_d());
  return refinement_lattice(growth_strings(n, [](const auto&) { return true; }));
}

RankedLattice contraction_lattice(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "contraction lattice needs at least one vertex");
  if (n > 12) throw Error(ErrorCode::SizeGuard, "contraction lattice: at most 12 vertices");
  const auto adj = g.adjacency();
  auto connected_blocks = [&](const std::vector<std::uint8_t>& a) {
    std::vector<bool> seen(n, false);
    std::vector<bool> block_done(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (block_done[a[s]]) continue;
      block_done[a[s]] = true;
      std::vector<std::size_t> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
          if (!seen[w] && a[w] == a[v]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      for (std::size_t v = 0; v < n; ++v)
        if (a[v] == a[s] && !seen[v]) return false;
    }
    return true;
  };
  auto parts = growth_strings(n, connected_blocks);
  check_size("contraction lattice", static_cast<double>(parts.size()));
  return refinement_lattice(std::move(parts));
}

std::vector<std::size_t> partition_blocks(const std::string& label, std::size_t n) {
  std::vector<std::size_t> block(n, n);
  std::size_t b = 0;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, '|')) {
    std::vector<std::string> items;
    if (n > 9) {
      std::stringstream ps(part);
      std::string item;
      while (std::getline(ps, item, ',')) items.push_back(item);
    } else {
      for (char c : part) items.emplace_back(1, c);
    }
    for (const auto& item : items) {
      std::size_t v = std::stoul(item);
      if (v == 0 || v > n || block[v - 1] != n)
        throw Error(ErrorCode::Parse, "bad partition label '" + label + "'");
      block[v - 1] = b;
    }
    ++b;
  }
  for (auto x : block)
    if (x == n) throw Error(ErrorCode::Parse, "partition label '" + label + "' misses elements");
  return block;
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
  const auto limit = threshold(density);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, std::string>> rel;
  auto labels = numbered(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, limit)) rel.emplace_back(labels[i], labels[j]);
  return Poset::from_covers(std::move(labels), rel);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t i = 1; i < n; ++i) parent[i] = bounded(rng, i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[bounded(rng, i)]);
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(perm[i], perm[parent[i]]);
  return Graph(n, std::move(edges));
}

Graph random_graph(std::size_t n, double density, std::uint64_t seed) {
  const auto limit = threshold(density);
  std::mt19937_64 rng(seed);
  std::vector<Graph::Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng, limit)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(std::size_t n, double density, std::uint64_t seed) {
  if (n > 1 && density == 0.0) throw Error(ErrorCode::InvalidArgument, "density 0 never gives a connected graph");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = random_graph(n, density, seed * 1000003ULL + attempt);
    if (g.connected()) return g;
  }
}

RankedLattice truncate(const RankedLattice& l, std::size_t k) {
  Poset::Bits keep(l.size());
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.rank(x) < k) keep.set(x);
  keep.set(l.one());
  return RankedLattice::from_poset(l.poset().induced(keep));
}

MonotoneMap random_monotone_map(const Poset& source, const Poset& target, std::uint64_t seed) {
  if (target.empty())
    throw Error(ErrorCode::InvalidArgument, "no map into an empty poset");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> image(source.size());
  for (int attempt = 0; attempt < 20; ++attempt) {
    bool ok = true;
    for (std::size_t x = 0; x < source.size() && ok; ++x) {
      Poset::Bits allowed = target.full_bits();
      for (auto z : source.lower_covers(x)) allowed &= target.up_set(image[z]);
      auto options = elements_of(allowed);
      if (options.empty()) ok = false;
      else image[x] = options[bounded(rng, options.size())];
    }
    if (ok) return MonotoneMap(source, target, std::move(image));
  }
  std::fill(image.begin(), image.end(), bounded(rng, target.size()));
  return MonotoneMap(source, target, std::move(image));
}

Poset named_poset(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  auto number = [&](std::size_t i) -> std::uint64_t {
    if (i >= parts.size()) throw Error(ErrorCode::InvalidArgument, "instance '" + spec + "' is missing a parameter");
    try {
      return std::stoull(parts[i]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad number '" + parts[i] + "' in instance '" + spec + "'");
    }
  };
  const std::string kind = parts.empty() ? "" : parts[0];
  if (kind == "boolean") return boolean_lattice(number(1)).poset();
  if (kind == "chain") return chain(number(1));
  if (kind == "divisor") return divisor_lattice(number(1)).poset();
  if (kind == "subspace") return subspace_lattice(static_cast<unsigned>(number(1)), number(2)).poset();
  if (kind == "partition") return partition_lattice(number(1)).poset();
  if (kind == "antichain") {
    auto n = number(1);
    return Poset::from_covers(numbered(n), {});
  }
  if (kind == "contraction") {
    if (parts.size() < 3) throw Error(ErrorCode::InvalidArgument, "use contraction:<family>:<n>");
    return contraction_lattice(named_graph(parts[1] + ":" + parts[2])).poset();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown instance '" + spec + "'");
}

}  // namespace mobiuslab
