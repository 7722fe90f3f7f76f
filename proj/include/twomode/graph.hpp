#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twomode {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Immutable simple undirected graph. Adjacency lists are sorted ascending and
/// the edge list is kept canonical (a < b, lexicographic order).
class Graph {
 public:
  Graph() = default;

  /// Throws Error{IndexOutOfRange, SelfLoop, DuplicateEdge}. Edges are
  /// unordered pairs; (a,b) and (b,a) count as duplicates.
  Graph(std::size_t n, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  bool has_edge(NodeId a, NodeId b) const;

  const std::vector<Edge>& edges() const { return edges_; }

  /// Display label; defaults to the decimal node index.
  std::string label(NodeId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

enum class Part : std::uint8_t { A0, A1 };

inline Part other(Part p) { return p == Part::A0 ? Part::A1 : Part::A0; }

/// Graph together with a two-part node partition; every edge crosses parts.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Throws Error{IndexOutOfRange, IntraPartEdge} plus everything Graph throws.
  BipartiteGraph(std::vector<Part> parts, std::span<const Edge> edges,
                 std::vector<std::string> labels = {});

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  Part part(NodeId v) const { return parts_[v]; }
  const std::vector<Part>& parts() const { return parts_; }
  std::size_t n0() const { return n0_; }
  std::size_t n1() const { return n1_; }
  std::size_t part_size(Part p) const { return p == Part::A0 ? n0_ : n1_; }

  /// Nodes of one part, ascending.
  std::vector<NodeId> nodes_in(Part p) const;

  /// Same node set, parts and labels; new edge set.
  BipartiteGraph with_edges(std::span<const Edge> edges) const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.parts_ == b.parts_ && a.graph_ == b.graph_;
  }

 private:
  Graph graph_;
  std::vector<Part> parts_;
  std::size_t n0_ = 0;
  std::size_t n1_ = 0;
};

/// Canonical two-mode construction: left index i becomes node i (part A0),
/// right index j becomes node n0 + j (part A1).
BipartiteGraph build_bipartite(std::size_t n0, std::size_t n1,
                               std::span<const Edge> left_right_edges,
                               std::vector<std::string> labels = {});

/// Hop distances from `source`; kUnreachable marks other components.
std::vector<std::size_t> bfs_distances(const Graph& g, NodeId source);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// W(v): sum of hop distances from v. Throws DisconnectedGraph.
std::uint64_t total_distance(const Graph& g, NodeId v);

/// W for every node. Throws DisconnectedGraph.
std::vector<std::uint64_t> total_distances(const Graph& g);

/// BFS tree rooted at `root`; each node hangs off its lowest-id neighbour one
/// level closer to the root. Throws DisconnectedGraph.
Graph bfs_spanning_tree(const Graph& g, NodeId root);
BipartiteGraph bfs_spanning_tree(const BipartiteGraph& g, NodeId root);

/// A tree seen from a root.
struct RootedTree {
  NodeId root = 0;
  std::vector<NodeId> parent;                 // parent[root] == root
  std::vector<std::size_t> depth;
  std::vector<std::vector<NodeId>> children;  // ascending
  std::vector<NodeId> order;                  // BFS order from the root

  /// Nodes of the subtree rooted at v (v included), ascending.
  std::vector<NodeId> subtree(NodeId v) const;
  std::size_t subtree_size(NodeId v) const;
  /// Height of the subtree rooted at v (0 for a leaf).
  std::size_t subtree_height(NodeId v) const;
};

/// Throws NotATree when g is not a tree.
RootedTree root_tree(const Graph& g, NodeId root);

}  // namespace twomode
