#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twomode/graph.hpp"
#include "twomode/rational.hpp"

namespace twomode {

// ---------------------------------------------------------------------------
// Balance rewiring: move one child of an overloaded spoke to a light spoke.
// ---------------------------------------------------------------------------

/// The child of w1 that rewire_balance moves: its lowest-id neighbour other
/// than u.
NodeId rewire_moved_child(const BipartiteGraph& tree, NodeId u, NodeId w1);

/// Replaces edge w1-z by w2-z, z = rewire_moved_child(tree, u, w1).
/// Preconditions: tree; N(u) = A1 with u in A0; w1, w2 in A1;
/// deg(w1) >= deg(w2) + 2.
/// Throws NotATree, RootNotAdjacentToAllA1, DegreeGapTooSmall.
BipartiteGraph rewire_balance(const BipartiteGraph& tree, NodeId u, NodeId w1,
                              NodeId w2);

/// Repeats rewire_balance on (highest-degree, lowest-degree) spokes, lowest
/// ids first, until all A1 degrees differ by at most one.
BipartiteGraph balance_to_fixpoint(const BipartiteGraph& tree, NodeId u);

/// Per-node checks of one rewire step. x ranges over the children of w1 other
/// than u and z, y over the children of w2 other than u.
struct RewireAudit {
  NodeId moved = 0;
  std::size_t t = 0;  // |children of w1| - 1 (z excluded)
  std::size_t s = 0;  // |children of w2|
  std::array<bool, 6> items{};  // W'(x)=W(x)+2, W'(y)=W(y)-2,
                                // W(y)=W(x)+2(t-s+1), W'(z)=W(z)+2(t-s),
                                // W'(w1)=W(w1)+2, W'(w2)=W(w2)-2
  Rational c1_before;
  Rational c1_after;

  bool all_items() const;
  bool increased() const { return c1_after > c1_before; }
};

RewireAudit audit_rewire(const BipartiteGraph& tree, NodeId u, NodeId w1, NodeId w2);

// ---------------------------------------------------------------------------
// Flattening: lift the depth-3 structure under the largest deep child z.
// ---------------------------------------------------------------------------

/// Node sets of one flattening step; every set is sorted ascending.
struct TransformContext {
  NodeId root = 0;
  NodeId z = 0;
  NodeId w = 0;
  std::vector<NodeId> ys;      // grandchildren of z (distance 3 from root)
  std::vector<NodeId> Y;       // union of the subtrees rooted at ys
  std::vector<NodeId> P;       // children of z with children of their own
  std::vector<NodeId> Pprime;  // leaf children of z
  std::vector<NodeId> S;       // children of w moved under z
  std::vector<NodeId> Sprime;  // V(T_w) \ (S + {w})
  std::vector<NodeId> R;       // V \ (V(T_z) + V(T_w)), contains root
  std::size_t n = 0;
  bool heavy_w = false;        // w was chosen because |V(T_w)| >= n/2

  friend bool operator==(const TransformContext&, const TransformContext&) = default;
};

/// nullopt when every node is within distance 2 of u.
/// Throws NotATree, RootDegreeOne.
std::optional<TransformContext> build_flatten_context(const BipartiteGraph& tree,
                                                      NodeId u);

/// Adds u-y for every y in ys; detaches every p in P from z and keeps only its
/// edge to its lowest-id child; re-parents S from w to z.
/// Throws ContextMismatch unless ctx is what build_flatten_context returns.
BipartiteGraph apply_flatten(const BipartiteGraph& tree, NodeId u,
                             const TransformContext& ctx);

enum class ClauseStatus { Pass, Fail, Vacuous, PreconditionUnmet };

std::string_view to_string(ClauseStatus status);

struct ClauseResult {
  ClauseStatus status = ClauseStatus::Vacuous;
  std::string detail;  // first violating node on failure

  bool ok() const { return status != ClauseStatus::Fail; }
};

/// Comparison of W (before) and W' (after) over the context's node sets.
struct FlattenAudit {
  // (i)   x in R          : W(x) - W'(x) = 2|Y|
  // (ii)  x in {z} + P'   : W'(x) >= W(x) - 2|S|
  // (iii) x in {w} + S'   : W'(x) = W(x) + 2|S| - 2|Y|
  // (iv)  x in P + S      : W'(x) >= W(x)
  // (v)   S nonempty      : W, W' strictly larger on P' than on S'
  // (vi)  x in Y          : W'(x) <= W(x)
  // (vii) x in Y+R+S'+{w} : W'(x) >= W'(u)
  std::array<ClauseResult, 7> lemma2;
  // n1 >= 3 and C1(u;G) >= lower_bound(n1) => 0 <= (W-W')/W < 2 C1(u;G) on Y,
  // with n1 the size of the part not containing u
  ClauseResult lemma3;
  Rational c1_before;
  Rational c1_after;
  bool lemma3_precondition = false;

  bool lemma2_ok() const;
  bool increased() const { return c1_after > c1_before; }
};

/// Throws ContextMismatch unless after == apply_flatten(before, ctx.root, ctx).
FlattenAudit audit_transform(const BipartiteGraph& before,
                             const BipartiteGraph& after,
                             const TransformContext& ctx);

}  // namespace twomode
