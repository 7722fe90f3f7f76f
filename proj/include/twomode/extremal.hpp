#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "twomode/graph.hpp"
#include "twomode/rational.hpp"

namespace twomode {

/// Euclidean split of the n0 - 1 non-root A0 nodes over the n1 spokes:
/// m = p * n1 + r with 0 <= r < n1.
struct ExtremalParams {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::size_t r = 0;

  std::size_t ceil_share() const { return r > 0 ? p + 1 : p; }
  std::size_t floor_share() const { return p; }

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

/// Throws InvalidSize unless n0, n1 >= 1.
ExtremalParams extremal_params(std::size_t n0, std::size_t n1);

struct ExtremalTree {
  BipartiteGraph graph;
  NodeId root = 0;
};

/// The depth-2 extremal tree H(u; n0, n1). Node 0 is the root (A0), nodes
/// 1..n1 are its neighbours (A1), and leaf n1 + k (k >= 1) hangs off spoke
/// ((k - 1) mod n1) + 1, so spokes 1..r carry the extra leaf. Labels are the
/// decimal node indices.
ExtremalTree build_extremal_tree(std::size_t n0, std::size_t n1);

/// Multiset of total distances: W value -> number of nodes.
using WProfile = std::map<std::uint64_t, std::size_t>;

/// W multiset of H(u; n0, n1) from the closed forms (root, r heavy spokes,
/// n1 - r light spokes, and their leaves).
WProfile closed_form_w_profile(std::size_t n0, std::size_t n1);

/// W multiset of any connected graph, by BFS.
WProfile w_profile(const Graph& g);

/// W(root) of H(u; n0, n1), i.e. n1 + 2m.
std::uint64_t closed_form_root_distance(std::size_t n0, std::size_t n1);

/// C1(root; H(u; n0, n1)) evaluated from the closed-form W profile.
Rational closed_form_centralization(std::size_t n0, std::size_t n1);

/// The same value through the simplified five-term expression in (n1, m, r),
/// valid only when r > 0. Throws InvalidSize when r == 0.
Rational closed_form_centralization_reduced(std::size_t n0, std::size_t n1);

/// (n1 - 1) / (2 (2 n1 - 1)), the lower bound on C1(root; H) for n0 >= n1.
Rational lower_bound(std::size_t n1);

/// lim_{n0 -> inf} C1(root; H(u; n0, n1)) = (n1 - 1) / (4 n1 - 2).
Rational asymptotic_limit(std::size_t n1);

}  // namespace twomode
