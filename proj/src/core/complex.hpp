#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/integer.hpp"
#include "core/poset.hpp"
#include "core/report.hpp"

namespace mobiuslab {

/// Finite simplicial complex with explicitly stored faces. The empty face is
/// not a face.
class SimplicialComplex {
 public:
  using Face = std::vector<std::uint32_t>;

  SimplicialComplex() = default;

  /// Closes `faces` under nonempty subsets. Vertex indices refer to
  /// `vertex_labels`. Throws InvalidArgument on an out-of-range vertex.
  static SimplicialComplex from_faces(std::vector<std::string> vertex_labels, std::vector<Face> faces);

  const std::vector<std::string>& vertex_labels() const { return labels_; }
  /// Sorted by dimension, then lexicographically.
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t dimension() const { return faces_.empty() ? 0 : faces_.back().size() - 1; }

 private:
  std::vector<std::string> labels_;
  std::vector<Face> faces_;
};

/// Nonempty chains of p. At most 20 elements unless the size guard is
/// raised.
SimplicialComplex order_complex(const Poset& p);

/// f_k = number of faces of dimension k, k = 0..dim; empty for the empty
/// complex.
std::vector<Integer> level_numbers(const SimplicialComplex& s);

Integer euler_characteristic(const SimplicialComplex& s);

/// Faces ordered by inclusion, labelled "{u,v,...}".
Poset face_poset(const SimplicialComplex& s);

/// Some element comparable with every element, preferring the smallest
/// index.
std::optional<std::size_t> is_cone(const Poset& p);

/// Order-preserving map between two posets, validated on construction.
class MonotoneMap {
 public:
  /// Throws InvalidArgument when the map is not order preserving or has the
  /// wrong length.
  MonotoneMap(Poset source, Poset target, std::vector<std::size_t> image);

  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  const std::vector<std::size_t>& images() const { return image_; }

 private:
  Poset source_;
  Poset target_;
  std::vector<std::size_t> image_;
};

/// mu(Q) = mu(P) + sum_y mu(Q_{y<}) mu(f^{-1}(Q_{<=y})).
Report verify_baclawski(const MonotoneMap& f);

/// mu(S) = mu(I) + sum_{y in S \ I} mu(S_{y<}) mu(I_{<=y}) for a down-closed
/// subset I. Throws InvalidArgument when I is not down-closed.
Report verify_ideal_decomposition(const Poset& s, const Poset::Bits& ideal);

/// Checks that f: S -> S is decreasing or increasing and idempotent, and
/// then that its image has the Mobius number of S.
Report retract_check(const MonotoneMap& f);

struct Dismantling {
  std::vector<std::string> deletions;
  Poset core;
  bool dismantlable = false;
  Integer mobius;
  bool pass = false;
};

/// Repeatedly deletes the first element that covers exactly one element or
/// is covered by exactly one element. Dismantlable iff one element remains,
/// in which case the Mobius number must be 0.
Dismantling dismantle(const Poset& p);

}  // namespace mobiuslab
