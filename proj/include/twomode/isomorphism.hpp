#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twomode/graph.hpp"

namespace twomode {

/// AHU canonical string of a tree seen from `root`; two rooted trees are
/// isomorphic iff their strings are equal. Throws NotATree.
std::string rooted_canonical_form(const Graph& tree, NodeId root);

/// Sorted degree sequence.
std::vector<std::size_t> degree_multiset(const Graph& g);

/// Rooted-tree isomorphism of (a, root_a) and (b, root_b). Returns false for
/// non-trees instead of throwing.
bool rooted_isomorphic(const Graph& a, NodeId root_a, const Graph& b, NodeId root_b);

}  // namespace twomode
