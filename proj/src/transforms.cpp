#include "twomode/transforms.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "twomode/centrality.hpp"
#include "twomode/error.hpp"
#include "twomode/extremal.hpp"

namespace twomode {

namespace {

using Weights = std::vector<std::uint64_t>;

std::int64_t diff(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

void require_tree(const BipartiteGraph& g) {
  if (!is_tree(g.graph())) throw Error(ErrorKind::NotATree, "input is not a tree");
}

void require_root_covers_a1(const BipartiteGraph& g, NodeId u) {
  if (u >= g.size()) throw Error(ErrorKind::IndexOutOfRange, "root " + std::to_string(u));
  const auto nbrs = g.graph().neighbors(u);
  const auto a1 = g.nodes_in(Part::A1);
  if (g.part(u) != Part::A0 || !std::equal(nbrs.begin(), nbrs.end(), a1.begin(), a1.end())) {
    throw Error(ErrorKind::RootNotAdjacentToAllA1,
                "root " + g.graph().label(u) + " must be in A0 and adjacent to all of A1");
  }
}

std::vector<NodeId> set_union(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<NodeId> with(std::vector<NodeId> set, NodeId v) {
  set.insert(std::upper_bound(set.begin(), set.end(), v), v);
  return set;
}

// Universally quantified clause over `domain`.
template <typename Pred>
ClauseResult check_all(const std::vector<NodeId>& domain, const Graph& g, Pred pred) {
  if (domain.empty()) return {ClauseStatus::Vacuous, {}};
  for (NodeId x : domain) {
    if (!pred(x)) return {ClauseStatus::Fail, "node " + g.label(x)};
  }
  return {ClauseStatus::Pass, {}};
}

}  // namespace

NodeId rewire_moved_child(const BipartiteGraph& tree, NodeId u, NodeId w1) {
  for (NodeId v : tree.graph().neighbors(w1)) {
    if (v != u) return v;
  }
  throw Error(ErrorKind::DegreeGapTooSmall,
              "spoke " + tree.graph().label(w1) + " has no child to move");
}

BipartiteGraph rewire_balance(const BipartiteGraph& tree, NodeId u, NodeId w1,
                              NodeId w2) {
  require_tree(tree);
  require_root_covers_a1(tree, u);
  const Graph& g = tree.graph();
  if (w1 >= tree.size() || w2 >= tree.size() || tree.part(w1) != Part::A1 ||
      tree.part(w2) != Part::A1) {
    throw Error(ErrorKind::IndexOutOfRange, "w1 and w2 must be A1 nodes");
  }
  if (g.degree(w1) < g.degree(w2) + 2) {
    throw Error(ErrorKind::DegreeGapTooSmall,
                "deg(" + g.label(w1) + ")=" + std::to_string(g.degree(w1)) +
                    " < deg(" + g.label(w2) + ")+2=" + std::to_string(g.degree(w2) + 2));
  }
  const NodeId z = rewire_moved_child(tree, u, w1);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e == Edge{std::min(w1, z), std::max(w1, z)}) {
      edges.emplace_back(w2, z);
    } else {
      edges.push_back(e);
    }
  }
  return tree.with_edges(edges);
}

BipartiteGraph balance_to_fixpoint(const BipartiteGraph& tree, NodeId u) {
  BipartiteGraph current = tree;
  const auto spokes = tree.nodes_in(Part::A1);
  for (;;) {
    NodeId heavy = spokes.front();
    NodeId light = spokes.front();
    for (NodeId w : spokes) {
      if (current.graph().degree(w) > current.graph().degree(heavy)) heavy = w;
      if (current.graph().degree(w) < current.graph().degree(light)) light = w;
    }
    if (current.graph().degree(heavy) < current.graph().degree(light) + 2) {
      return current;
    }
    current = rewire_balance(current, u, heavy, light);
  }
}

bool RewireAudit::all_items() const {
  return std::all_of(items.begin(), items.end(), [](bool b) { return b; });
}

RewireAudit audit_rewire(const BipartiteGraph& tree, NodeId u, NodeId w1, NodeId w2) {
  const BipartiteGraph after = rewire_balance(tree, u, w1, w2);
  const Graph& g = tree.graph();
  RewireAudit audit;
  audit.moved = rewire_moved_child(tree, u, w1);
  const NodeId z = audit.moved;

  std::vector<NodeId> xs, ys;
  for (NodeId v : g.neighbors(w1)) {
    if (v != u && v != z) xs.push_back(v);
  }
  for (NodeId v : g.neighbors(w2)) {
    if (v != u) ys.push_back(v);
  }
  audit.t = xs.size();
  audit.s = ys.size();
  const auto t = static_cast<std::int64_t>(audit.t);
  const auto s = static_cast<std::int64_t>(audit.s);

  const Weights w = total_distances(g);
  const Weights wp = total_distances(after.graph());

  audit.items[0] = std::all_of(xs.begin(), xs.end(),
                               [&](NodeId x) { return diff(wp[x], w[x]) == 2; });
  audit.items[1] = std::all_of(ys.begin(), ys.end(),
                               [&](NodeId y) { return diff(wp[y], w[y]) == -2; });
  audit.items[2] = std::all_of(xs.begin(), xs.end(), [&](NodeId x) {
    return std::all_of(ys.begin(), ys.end(),
                       [&](NodeId y) { return diff(w[y], w[x]) == 2 * (t - s + 1); });
  });
  audit.items[3] = diff(wp[z], w[z]) == 2 * (t - s);
  audit.items[4] = diff(wp[w1], w[w1]) == 2;
  audit.items[5] = diff(wp[w2], w[w2]) == -2;

  audit.c1_before = centralization(g, u);
  audit.c1_after = centralization(after.graph(), u);
  return audit;
}

std::optional<TransformContext> build_flatten_context(const BipartiteGraph& tree,
                                                      NodeId u) {
  require_tree(tree);
  if (u >= tree.size()) throw Error(ErrorKind::IndexOutOfRange, "root " + std::to_string(u));
  const Graph& g = tree.graph();
  if (g.degree(u) < 2) {
    throw Error(ErrorKind::RootDegreeOne, "root " + g.label(u) + " has degree " +
                                              std::to_string(g.degree(u)));
  }
  const RootedTree rt = root_tree(g, u);
  const std::size_t n = g.size();

  // z: largest child (lowest id on ties) whose subtree reaches depth 2
  std::optional<NodeId> z;
  for (NodeId c : rt.children[u]) {
    if (rt.subtree_height(c) < 2) continue;
    if (!z || rt.subtree_size(c) > rt.subtree_size(*z)) z = c;
  }
  if (!z) return std::nullopt;

  TransformContext ctx;
  ctx.root = u;
  ctx.z = *z;
  ctx.n = n;
  for (NodeId p : rt.children[ctx.z]) {
    if (rt.children[p].empty()) {
      ctx.Pprime.push_back(p);
      continue;
    }
    ctx.P.push_back(p);
    for (NodeId y : rt.children[p]) {
      ctx.ys.push_back(y);
      ctx.Y = set_union(ctx.Y, rt.subtree(y));
    }
  }
  std::sort(ctx.ys.begin(), ctx.ys.end());

  std::optional<NodeId> heavy;
  std::optional<NodeId> largest;
  for (NodeId c : rt.children[u]) {
    if (c == ctx.z) continue;
    const std::size_t size = rt.subtree_size(c);
    if (!heavy && 2 * size >= n) heavy = c;
    if (!largest || size > rt.subtree_size(*largest)) largest = c;
  }

  std::vector<NodeId> tw_rest;
  if (heavy) {
    ctx.heavy_w = true;
    ctx.w = *heavy;
    const std::size_t moved = rt.subtree_size(ctx.w) - n / 2;
    // T_w is a star here (a deeper T_w would outweigh T_z and be picked as z),
    // so the lowest-id children of w are its lowest-id leaves.
    std::vector<NodeId> leaves;
    for (NodeId c : rt.children[ctx.w]) {
      if (rt.children[c].empty()) leaves.push_back(c);
    }
    if (leaves.size() < moved) {
      throw Error(ErrorKind::ContextMismatch, "heavy child is not a star");
    }
    ctx.S.assign(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(moved));
  } else {
    ctx.w = *largest;
  }
  const auto tw = rt.subtree(ctx.w);
  for (NodeId v : tw) {
    if (v != ctx.w && !std::binary_search(ctx.S.begin(), ctx.S.end(), v)) {
      ctx.Sprime.push_back(v);
    }
  }

  const auto tz = rt.subtree(ctx.z);
  const auto covered = set_union(tz, tw);
  for (NodeId v = 0; v < n; ++v) {
    if (!std::binary_search(covered.begin(), covered.end(), v)) ctx.R.push_back(v);
  }
  return ctx;
}

BipartiteGraph apply_flatten(const BipartiteGraph& tree, NodeId u,
                             const TransformContext& ctx) {
  const auto expected = build_flatten_context(tree, u);
  if (!expected || *expected != ctx) {
    throw Error(ErrorKind::ContextMismatch,
                "context was not built from this tree and root");
  }
  const Graph& g = tree.graph();
  const RootedTree rt = root_tree(g, u);

  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  const auto drop = [&](NodeId a, NodeId b) { edges.erase({std::min(a, b), std::max(a, b)}); };
  const auto add = [&](NodeId a, NodeId b) { edges.insert({std::min(a, b), std::max(a, b)}); };

  for (NodeId y : ctx.ys) add(u, y);
  for (NodeId p : ctx.P) {
    drop(ctx.z, p);
    const auto& kids = rt.children[p];
    for (std::size_t i = 1; i < kids.size(); ++i) drop(p, kids[i]);
  }
  for (NodeId s : ctx.S) {
    drop(ctx.w, s);
    add(ctx.z, s);
  }
  const std::vector<Edge> out(edges.begin(), edges.end());
  return tree.with_edges(out);
}

std::string_view to_string(ClauseStatus status) {
  switch (status) {
    case ClauseStatus::Pass: return "pass";
    case ClauseStatus::Fail: return "fail";
    case ClauseStatus::Vacuous: return "vacuous";
    case ClauseStatus::PreconditionUnmet: return "precondition unmet";
  }
  return "unknown";
}

bool FlattenAudit::lemma2_ok() const {
  return std::all_of(lemma2.begin(), lemma2.end(),
                     [](const ClauseResult& c) { return c.ok(); });
}

FlattenAudit audit_transform(const BipartiteGraph& before,
                             const BipartiteGraph& after,
                             const TransformContext& ctx) {
  const NodeId u = ctx.root;
  if (!(after == apply_flatten(before, u, ctx))) {
    throw Error(ErrorKind::ContextMismatch, "graph pair is not a flatten step of ctx");
  }
  const Graph& g = before.graph();
  const Weights w = total_distances(g);
  const Weights wp = total_distances(after.graph());
  const auto y2 = 2 * static_cast<std::int64_t>(ctx.Y.size());
  const auto s2 = 2 * static_cast<std::int64_t>(ctx.S.size());
  const auto dw = [&](NodeId x) { return diff(wp[x], w[x]); };  // W' - W

  FlattenAudit audit;
  audit.lemma2[0] = check_all(ctx.R, g, [&](NodeId x) { return -dw(x) == y2; });
  audit.lemma2[1] = check_all(with(ctx.Pprime, ctx.z), g,
                              [&](NodeId x) { return dw(x) >= -s2; });
  audit.lemma2[2] = check_all(with(ctx.Sprime, ctx.w), g,
                              [&](NodeId x) { return dw(x) == s2 - y2; });
  audit.lemma2[3] = check_all(set_union(ctx.P, ctx.S), g,
                              [&](NodeId x) { return dw(x) >= 0; });
  if (ctx.S.empty()) {
    audit.lemma2[4] = {ClauseStatus::Vacuous, {}};
  } else {
    const std::vector<NodeId> domain = ctx.Sprime.empty() ? std::vector<NodeId>{} : ctx.Pprime;
    audit.lemma2[4] = check_all(domain, g, [&](NodeId x1) {
      return std::all_of(ctx.Sprime.begin(), ctx.Sprime.end(), [&](NodeId x2) {
        return w[x1] > w[x2] && wp[x1] > wp[x2];
      });
    });
  }
  audit.lemma2[5] = check_all(ctx.Y, g, [&](NodeId x) { return dw(x) <= 0; });
  const auto far = set_union(set_union(ctx.Y, ctx.R), with(ctx.Sprime, ctx.w));
  audit.lemma2[6] = check_all(far, g, [&](NodeId x) { return wp[x] >= wp[u]; });

  audit.c1_before = centralization(g, u);
  audit.c1_after = centralization(after.graph(), u);

  // the bound counts the part opposite the root, whichever side u is on
  const std::size_t n1 = before.part(u) == Part::A0 ? before.n1() : before.n0();
  audit.lemma3_precondition = n1 >= 3 && audit.c1_before >= lower_bound(n1);
  if (!audit.lemma3_precondition) {
    audit.lemma3 = {ClauseStatus::PreconditionUnmet, {}};
  } else {
    const Rational bound = Rational(2) * audit.c1_before;
    audit.lemma3 = check_all(ctx.Y, g, [&](NodeId x) {
      const Rational ratio(diff(w[x], wp[x]), static_cast<std::int64_t>(w[x]));
      return ratio.sign() >= 0 && ratio < bound;
    });
  }
  return audit;
}

}  // namespace twomode
