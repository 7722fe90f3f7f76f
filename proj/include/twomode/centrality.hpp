#pragma once

#include <cstdint>
#include <vector>

#include "twomode/graph.hpp"
#include "twomode/rational.hpp"

namespace twomode {

/// C(v) = 1/W(v). Throws DisconnectedGraph, or InvalidSize on a single node
/// (W = 0 there, so closeness is undefined).
Rational closeness(const Graph& g, NodeId v);

/// Freeman closeness centralization of a node:
///   C1(v;G) = sum_u [C(v) - C(u)] = n C(v) - sum_u C(u).
/// A single-node graph has C1 = 0. Throws DisconnectedGraph.
Rational centralization(const Graph& g, NodeId v);

struct NodeCentrality {
  NodeId node = 0;
  std::uint64_t total_distance = 0;
  Rational closeness;
  Rational centralization;
};

/// W, C and C1 for every node, computed with one shared closeness sum.
struct CentralityReport {
  std::vector<NodeCentrality> nodes;
  Rational closeness_sum;
};

CentralityReport centrality_report(const Graph& g);

/// Maximum of C1 over one part. `ties` holds every maximizer ascending; the
/// canonical representative is ties.front().
struct PartMaximum {
  std::vector<NodeId> ties;
  Rational value;

  NodeId representative() const { return ties.front(); }
};

PartMaximum part_max_centralization(const BipartiteGraph& g, Part part);
PartMaximum part_max_centralization(const BipartiteGraph& g, Part part,
                                    const CentralityReport& report);

/// Principal eigenvector of A + I by power iteration, normalised to sum 1.
/// The +I shift removes the +/- lambda oscillation of bipartite spectra and
/// leaves eigenvectors unchanged. Converged when the L1 change of one step
/// drops below `tol`. Throws DisconnectedGraph, NonConvergence.
std::vector<double> eigenvector_centrality(const Graph& g, double tol = 1e-12,
                                           std::size_t max_iterations = 100000);

/// True iff every node of maximum closeness (minimum W) has maximum degree.
bool max_degree_property_check(const Graph& g);

}  // namespace twomode
