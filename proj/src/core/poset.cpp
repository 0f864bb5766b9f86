#include "core/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <sstream>

#include "core/error.hpp"

namespace mobiuslab {

namespace {

using Bits = Poset::Bits;

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + labels[i] + "'");
  }
  return index;
}

std::vector<Bits> transpose(const std::vector<Bits>& up) {
  const std::size_t n = up.size();
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) for_each_bit(up[i], [&](std::size_t j) { down[j].set(i); });
  return down;
}

// upper covers of i: minimal elements of the strict up-set of i.
std::vector<std::vector<std::size_t>> compute_upper_covers(const std::vector<Bits>& up) {
  const std::size_t n = up.size();
  std::vector<Bits> strict(up);
  for (std::size_t i = 0; i < n; ++i) strict[i].reset(i);
  std::vector<std::vector<std::size_t>> result(n);
  Bits shadow(n);
  for (std::size_t i = 0; i < n; ++i) {
    shadow.reset();
    for_each_bit(strict[i], [&](std::size_t k) { shadow |= strict[k]; });
    Bits minimal = strict[i] - shadow;
    result[i] = elements_of(minimal);
  }
  return result;
}

}  // namespace

std::vector<std::size_t> elements_of(const Poset::Bits& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for_each_bit(bits, [&](std::size_t i) { out.push_back(i); });
  return out;
}

Poset Poset::finish(std::vector<std::string> labels, std::vector<Bits> up) {
  const std::size_t n = labels.size();
  index_labels(labels);
  auto upper = compute_upper_covers(up);

  // Kahn's algorithm over the cover digraph, smallest input position first.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : upper[i]) ++indegree[j];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    auto i = ready.top();
    ready.pop();
    order.push_back(i);
    for (auto j : upper[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (order.size() != n) throw Error(ErrorCode::Cycle, "order relation contains a cycle");

  bool identity = true;
  for (std::size_t k = 0; k < n; ++k) identity = identity && order[k] == k;

  Poset p;
  if (identity) {
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.upper_covers_ = std::move(upper);
  } else {
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
    p.labels_.resize(n);
    p.up_.assign(n, Bits(n));
    p.upper_covers_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      const auto ni = pos[i];
      p.labels_[ni] = std::move(labels[i]);
      for_each_bit(up[i], [&](std::size_t j) { p.up_[ni].set(pos[j]); });
      for (auto j : upper[i]) p.upper_covers_[ni].push_back(pos[j]);
      std::sort(p.upper_covers_[ni].begin(), p.upper_covers_[ni].end());
    }
  }
  p.index_ = index_labels(p.labels_);
  p.down_ = transpose(p.up_);
  p.lower_covers_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : p.upper_covers_[i]) {
      p.covers_.emplace_back(i, j);
      p.lower_covers_[j].push_back(i);
    }
  return p;
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  const auto index = index_labels(labels);
  const std::size_t n = labels.size();
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorCode::UnknownLabel, "unknown label '" + l + "' in cover list");
    return it->second;
  };
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [lo, hi] : covers) {
    auto a = lookup(lo), b = lookup(hi);
    if (a == b) throw Error(ErrorCode::Cycle, "cycle: " + lo + " -> " + lo);
    succ[a].push_back(b);
  }

  // Topological order of the generating digraph; on failure report a cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : succ[i]) ++indegree[j];
  std::vector<std::size_t> topo;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    topo.push_back(i);
    for (auto j : succ[i])
      if (--indegree[j] == 0) stack.push_back(j);
  }
  if (topo.size() != n) {
    // Every vertex left with positive indegree has a predecessor also left;
    // walking predecessors backwards must revisit a vertex.
    std::vector<std::vector<std::size_t>> pred(n);
    for (std::size_t i = 0; i < n; ++i)
      for (auto j : succ[i])
        if (indegree[i] > 0 && indegree[j] > 0) pred[j].push_back(i);
    std::size_t v = 0;
    while (indegree[v] == 0) ++v;
    std::vector<std::size_t> seen(n, n), path;
    while (seen[v] == n) {
      seen[v] = path.size();
      path.push_back(v);
      v = pred[v].front();
    }
    std::vector<std::size_t> cycle(path.begin() + static_cast<long>(seen[v]), path.end());
    std::reverse(cycle.begin(), cycle.end());
    std::ostringstream os;
    os << "cycle: ";
    for (auto c : cycle) os << labels[c] << " -> ";
    os << labels[cycle.front()];
    throw Error(ErrorCode::Cycle, os.str());
  }

  std::vector<Bits> up(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    up[*it].set(*it);
    for (auto j : succ[*it]) up[*it] |= up[j];
  }
  return finish(std::move(labels), std::move(up));
}

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<Bits> up) {
  const std::size_t n = labels.size();
  if (up.size() != n) throw Error(ErrorCode::InvalidArgument, "relation size does not match label count");
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].size() != n) throw Error(ErrorCode::InvalidArgument, "relation row has wrong width");
    if (!up[i].test(i))
      throw Error(ErrorCode::InvalidArgument, "relation is not reflexive at '" + labels[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for_each_bit(up[i], [&](std::size_t j) {
      if (!ok) return;
      if (j != i && up[j].test(i))
        throw Error(ErrorCode::Cycle, "cycle: " + labels[i] + " -> " + labels[j] + " -> " + labels[i]);
      if (!up[j].is_subset_of(up[i])) {
        ok = false;
        throw Error(ErrorCode::InvalidArgument,
                    "relation is not transitive at '" + labels[i] + "' <= '" + labels[j] + "'");
      }
    });
  }
  return finish(std::move(labels), std::move(up));
}

Poset Poset::from_trusted_relation(std::vector<std::string> labels, std::vector<Bits> up) {
  return finish(std::move(labels), std::move(up));
}

std::optional<std::size_t> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::UnknownLabel, "unknown label '" + std::string(label) + "'");
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (lower_covers_[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (upper_covers_[i].empty()) out.push_back(i);
  return out;
}

std::optional<std::size_t> Poset::bottom() const {
  if (empty() || up_[0].count() != size()) return std::nullopt;
  return 0;
}

std::optional<std::size_t> Poset::top() const {
  if (empty() || down_[size() - 1].count() != size()) return std::nullopt;
  return size() - 1;
}

std::vector<std::size_t> Poset::heights() const {
  std::vector<std::size_t> h(size(), 0);
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j : lower_covers_[i]) h[i] = std::max(h[i], h[j] + 1);
  return h;
}

long Poset::longest_chain_length() const {
  if (empty()) return -1;
  auto h = heights();
  return static_cast<long>(*std::max_element(h.begin(), h.end()));
}

Poset Poset::induced(const Bits& subset) const { return induced(elements_of(subset)); }

Poset Poset::induced(const std::vector<std::size_t>& elements) const {
  std::vector<std::size_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t m = sorted.size();
  std::vector<std::string> labels(m);
  std::vector<Bits> up(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = labels_[sorted[a]];
    for (std::size_t b = a; b < m; ++b)
      if (leq(sorted[a], sorted[b])) up[a].set(b);
  }
  return finish(std::move(labels), std::move(up));
}

Poset dual(const Poset& p) {
  std::vector<Bits> up;
  up.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) up.push_back(p.down_set(i));
  return Poset::from_trusted_relation(p.labels(), std::move(up));
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t np = p.size(), nq = q.size(), n = np * nq;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j)
      for_each_bit(p.up_set(i), [&](std::size_t k) {
        for_each_bit(q.up_set(j), [&](std::size_t l) { up[i * nq + j].set(k * nq + l); });
      });
  return Poset::from_trusted_relation(std::move(labels), std::move(up));
}

Poset interval(const Poset& p, std::size_t a, std::size_t b) {
  if (!p.leq(a, b))
    throw Error(ErrorCode::InvalidArgument,
                "interval: '" + p.label(a) + "' is not below '" + p.label(b) + "'");
  return p.induced(p.up_set(a) & p.down_set(b));
}

Poset adjoin_bounds(const Poset& p) {
  auto fresh = [&](std::string base) {
    while (p.find(base)) base += "'";
    return base;
  };
  const std::size_t n = p.size() + 2;
  std::vector<std::string> labels;
  labels.reserve(n);
  labels.push_back(fresh("^0"));
  for (const auto& l : p.labels()) labels.push_back(l);
  labels.push_back(fresh("^1"));
  if (labels.front() == labels.back()) labels.back() += "'";
  std::vector<Bits> up(n, Bits(n));
  up[0].set();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for_each_bit(p.up_set(i), [&](std::size_t j) { up[i + 1].set(j + 1); });
    up[i + 1].set(n - 1);
  }
  up[n - 1].set(n - 1);
  return Poset::from_trusted_relation(std::move(labels), std::move(up));
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n || p.covers().size() != q.covers().size()) return std::nullopt;
  auto hp = p.heights(), hq = q.heights();
  auto signature = [](const Poset& s, const std::vector<std::size_t>& h, std::size_t i) {
    return std::array<std::size_t, 5>{s.up_set(i).count(), s.down_set(i).count(),
                                      s.upper_covers(i).size(), s.lower_covers(i).size(), h[i]};
  };
  std::vector<std::array<std::size_t, 5>> sp(n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sp[i] = signature(p, hp, i);
    sq[i] = signature(q, hq, i);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sq[c] != sp[i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = p.leq(k, i) == q.leq(map[k], c) && p.leq(i, k) == q.leq(c, map[k]);
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace mobiuslab
