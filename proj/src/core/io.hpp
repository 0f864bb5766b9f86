#pragma once

#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/inversion.hpp"
#include "core/poset.hpp"
#include "core/tree_distance.hpp"

namespace mobiuslab {

/// Whole file as a string. Throws InvalidArgument when it cannot be read.
std::string read_file(const std::string& path);

/// Parses JSON, reporting syntax errors as Parse with "line L, column C".
Json parse_json(const std::string& text);

/// {"elements": [...], "covers": [[lower, upper], ...]}. Non-cover pairs are
/// accepted and reduced away.
Poset poset_from_json(const Json& j);
/// Writes the transitive reduction.
Json poset_to_json(const Poset& p);

/// Lines "u v" with 0-indexed vertices. Blank lines and lines starting with
/// '#' are skipped, except "# vertices N", which fixes the vertex count;
/// otherwise it is one more than the largest vertex mentioned.
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const Graph& g);

/// {"n": n, "root": r, "parent": [...]}, the root's parent null or -1.
RootedTree tree_from_json(const Json& j);

/// Label -> integer map; labels not mentioned take the value 0.
PosetFunction function_from_json(const Json& j, const Poset& p);
Json function_to_json(const Poset& p, const PosetFunction& f);

/// {"q": q, "rows": [[...], ...]}.
struct GeneratorMatrix {
  unsigned q = 2;
  std::vector<std::vector<unsigned>> rows;
};
GeneratorMatrix generator_from_json(const Json& j);

}  // namespace mobiuslab
