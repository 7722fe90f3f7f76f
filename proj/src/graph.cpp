#include "twomode/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "twomode/error.hpp"

namespace twomode {

Graph::Graph(std::size_t n, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "label count " + std::to_string(labels_.size()) +
                    " does not match node count " + std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") on " + std::to_string(n) + " nodes");
    }
    if (a == b) throw Error(ErrorKind::SelfLoop, "node " + std::to_string(a));
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(dup->first) +
                                              "," + std::to_string(dup->second) + ")");
  }
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::string Graph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

BipartiteGraph::BipartiteGraph(std::vector<Part> parts,
                               std::span<const Edge> edges,
                               std::vector<std::string> labels)
    : graph_(parts.size(), edges, std::move(labels)), parts_(std::move(parts)) {
  for (auto [a, b] : graph_.edges()) {
    if (parts_[a] == parts_[b]) {
      throw Error(ErrorKind::IntraPartEdge,
                  "edge (" + graph_.label(a) + "," + graph_.label(b) + ")");
    }
  }
  n0_ = static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), Part::A0));
  n1_ = parts_.size() - n0_;
}

std::vector<NodeId> BipartiteGraph::nodes_in(Part p) const {
  std::vector<NodeId> out;
  out.reserve(part_size(p));
  for (NodeId v = 0; v < parts_.size(); ++v) {
    if (parts_[v] == p) out.push_back(v);
  }
  return out;
}

BipartiteGraph BipartiteGraph::with_edges(std::span<const Edge> edges) const {
  return BipartiteGraph(parts_, edges, graph_.labels());
}

BipartiteGraph build_bipartite(std::size_t n0, std::size_t n1,
                               std::span<const Edge> left_right_edges,
                               std::vector<std::string> labels) {
  std::vector<Edge> edges;
  edges.reserve(left_right_edges.size());
  for (auto [l, r] : left_right_edges) {
    if (l >= n0 || r >= n1) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge (" + std::to_string(l) + "," + std::to_string(r) +
                      ") with parts " + std::to_string(n0) + "," + std::to_string(n1));
    }
    edges.emplace_back(l, n0 + r);
  }
  std::vector<Part> parts(n0, Part::A0);
  parts.resize(n0 + n1, Part::A1);
  return BipartiteGraph(std::move(parts), edges, std::move(labels));
}

std::vector<std::size_t> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(source));
  }
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return g.size() > 0 && g.edge_count() + 1 == g.size() && is_connected(g);
}

std::uint64_t total_distance(const Graph& g, NodeId v) {
  std::uint64_t total = 0;
  for (std::size_t d : bfs_distances(g, v)) {
    if (d == kUnreachable) {
      throw Error(ErrorKind::DisconnectedGraph,
                  "node " + g.label(v) + " does not reach every node");
    }
    total += d;
  }
  return total;
}

std::vector<std::uint64_t> total_distances(const Graph& g) {
  std::vector<std::uint64_t> out(g.size());
  for (NodeId v = 0; v < g.size(); ++v) out[v] = total_distance(g, v);
  return out;
}

namespace {

std::vector<Edge> bfs_tree_edges(const Graph& g, NodeId root) {
  const auto dist = bfs_distances(g, root);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (NodeId v = 0; v < g.size(); ++v) {
    if (dist[v] == kUnreachable) {
      throw Error(ErrorKind::DisconnectedGraph,
                  "node " + g.label(v) + " unreachable from " + g.label(root));
    }
    if (v == root) continue;
    // neighbours are sorted, so the first one a level up is the lowest id
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] + 1 == dist[v]) {
        edges.emplace_back(w, v);
        break;
      }
    }
  }
  return edges;
}

}  // namespace

Graph bfs_spanning_tree(const Graph& g, NodeId root) {
  const auto edges = bfs_tree_edges(g, root);
  return Graph(g.size(), edges, g.labels());
}

BipartiteGraph bfs_spanning_tree(const BipartiteGraph& g, NodeId root) {
  return g.with_edges(bfs_tree_edges(g.graph(), root));
}

std::vector<NodeId> RootedTree::subtree(NodeId v) const {
  std::vector<NodeId> out{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (NodeId c : children[out[i]]) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t RootedTree::subtree_size(NodeId v) const {
  std::size_t count = 1;
  for (NodeId c : children[v]) count += subtree_size(c);
  return count;
}

std::size_t RootedTree::subtree_height(NodeId v) const {
  std::size_t h = 0;
  for (NodeId c : children[v]) h = std::max(h, 1 + subtree_height(c));
  return h;
}

RootedTree root_tree(const Graph& g, NodeId root) {
  if (!is_tree(g)) throw Error(ErrorKind::NotATree, "graph is not a tree");
  if (root >= g.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "root " + std::to_string(root));
  }
  RootedTree t;
  t.root = root;
  t.parent.assign(g.size(), root);
  t.depth.assign(g.size(), 0);
  t.children.assign(g.size(), {});
  t.order.reserve(g.size());
  std::vector<bool> seen(g.size(), false);
  seen[root] = true;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const NodeId v = t.order[head];
    for (NodeId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.depth[w] = t.depth[v] + 1;
      t.children[v].push_back(w);
      t.order.push_back(w);
    }
  }
  return t;
}

}  // namespace twomode
