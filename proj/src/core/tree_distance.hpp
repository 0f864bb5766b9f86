#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"
#include "core/matrix.hpp"
#include "core/report.hpp"

namespace mobiuslab {

/// Tree on vertices 0..n-1 with a chosen root. Matrices built from a tree are
/// indexed by position in a root-first breadth-first order, children visited
/// in increasing vertex number, so the path order is upper triangular.
class RootedTree {
 public:
  /// parent[v] is empty exactly for the root. Throws InvalidArgument unless
  /// the parent links form a single tree.
  static RootedTree from_parents(const std::vector<std::optional<std::size_t>>& parent);
  /// Throws InvalidArgument unless g is a tree.
  static RootedTree from_graph(const Graph& g, std::size_t root);

  std::size_t size() const { return parent_.size(); }
  std::size_t root() const { return root_; }
  const std::optional<std::size_t>& parent(std::size_t v) const { return parent_[v]; }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }

  /// order()[i] is the vertex at position i; position(v) inverts it.
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t position(std::size_t v) const { return position_[v]; }

  Graph graph() const;

 private:
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::size_t root_ = 0;
};

/// Path lengths between vertices.
IntMatrix distance_matrix(const RootedTree& t);

/// Z(u,v) = 1 when u lies on the path from the root to v.
IntMatrix tree_zeta(const RootedTree& t);

/// H = 1 e1^T + e1 1^T - 2I.
IntMatrix tree_h(std::size_t n);

/// Z is unit upper triangular, and Z^{-1} has 1 on the diagonal, -1 at each
/// (parent, child) and 0 elsewhere: the root indicator followed by the signed
/// incidence vectors of the edges.
Report tree_zeta_inverse_check(const RootedTree& t);

/// D = Z^T H Z entrywise.
Report graham_lovasz_check(const RootedTree& t);

struct GrahamPollak {
  Integer det;
  Integer closed_form;
  bool pass = false;
};

/// det D by elimination against (n-1)(-1)^{n-1} 2^{n-2}. Throws
/// InvalidArgument for n < 2.
GrahamPollak graham_pollak_det(const RootedTree& t);

/// (1/(2n-2)) b b^T - (Delta - A)/2 with b = (2I - Delta) 1. Throws
/// InvalidArgument for n < 2.
RatMatrix distance_inverse(const RootedTree& t);

/// D times the closed-form inverse is I, the closed-form H^{-1} inverts H,
/// and Z^{-1} H^{-1} Z^{-T} equals the closed form.
Report distance_inverse_check(const RootedTree& t);

/// det H by elimination against (n-1)(-2)^{n-1}/2, n >= 2.
Report h_determinant_check(std::size_t n);

}  // namespace mobiuslab
