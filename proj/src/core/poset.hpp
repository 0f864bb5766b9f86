#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mobiuslab {

/// Finite partially ordered set.
///
/// Elements are indexed 0..n-1 in a fixed linear extension: i <= j in the
/// order implies i <= j as indices, so every incidence matrix built over a
/// Poset is upper triangular. The linear extension is Kahn's ordering with
/// ties broken by the order in which labels were supplied, which makes every
/// derived matrix reproducible.
class Poset {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  using Cover = std::pair<std::size_t, std::size_t>;

  Poset() = default;

  /// Builds the order generated by `covers` (pairs lower, upper). Redundant
  /// pairs are accepted and dropped from the stored transitive reduction.
  /// Throws DuplicateLabel, UnknownLabel or Cycle (with one cycle spelled out).
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds from a full relation: up[i] holds every j with i <= j. The
  /// relation is validated as a partial order.
  static Poset from_relation(std::vector<std::string> labels, std::vector<Bits> up);

  /// As from_relation, without the O(n^3/64) validation. For generators whose
  /// relation is a partial order by construction.
  static Poset from_trusted_relation(std::vector<std::string> labels, std::vector<Bits> up);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && up_[i].test(j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  /// {j : i <= j} and {j : j <= i}; both contain i.
  const Bits& up_set(std::size_t i) const { return up_[i]; }
  const Bits& down_set(std::size_t i) const { return down_[i]; }

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_covers_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_covers_[i]; }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Length (edge count) of a longest chain; -1 for the empty poset.
  long longest_chain_length() const;

  /// Length of a longest chain from a minimal element up to each element.
  std::vector<std::size_t> heights() const;

  /// Subposet on the given elements, with the induced order. Indices of the
  /// result follow increasing indices in this poset.
  Poset induced(const Bits& subset) const;
  Poset induced(const std::vector<std::size_t>& elements) const;

  Bits empty_bits() const { return Bits(size()); }
  Bits full_bits() const { return Bits(size()).set(); }

 private:
  static Poset finish(std::vector<std::string> labels, std::vector<Bits> up);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
};

/// Same elements, order reversed. The linear extension is re-derived, so
/// indices generally differ from the input; look elements up by label.
Poset dual(const Poset& p);

/// Componentwise order on pairs, labelled "(x,y)".
Poset product(const Poset& p, const Poset& q);

/// The closed interval [a, b]. Throws InvalidArgument when a is not <= b.
Poset interval(const Poset& p, std::size_t a, std::size_t b);

/// Adds a fresh bottom and top, even when p is already bounded. Their labels
/// are "^0" and "^1", primed until unique. The new bottom is index 0 and the
/// new top is the last index.
Poset adjoin_bounds(const Poset& p);

/// Order isomorphism p -> q as an index map, if one exists. Backtracking
/// search; intended for posets of a few dozen elements.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q);

/// Elements of a bitset, in increasing order.
std::vector<std::size_t> elements_of(const Poset::Bits& bits);

template <typename Fn>
void for_each_bit(const Poset::Bits& bits, Fn&& fn) {
  for (auto i = bits.find_first(); i != Poset::Bits::npos; i = bits.find_next(i)) fn(i);
}

}  // namespace mobiuslab
