#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twomode/graph.hpp"
#include "twomode/rational.hpp"

namespace twomode {

inline constexpr std::size_t kMaxTreeNodes = 12;         // n0 + n1, trees mode
inline constexpr std::size_t kMaxGraphSlots = 16;        // n0 * n1, graphs mode
inline constexpr std::size_t kMaxStarNodes = 7;          // all graphs on n nodes
inline constexpr std::size_t kMaxLabeledTreeNodes = 10;  // Pruefer, any tree

enum class EnumerationMode { Trees, ConnectedGraphs };

struct EnumerationSpec {
  std::size_t n0 = 1;
  std::size_t n1 = 1;
  EnumerationMode mode = EnumerationMode::Trees;
  std::size_t jobs = 1;
};

/// Number of labeled spanning trees of K_{n0,n1}: n0^(n1-1) * n1^(n0-1).
std::uint64_t scoins_count(std::size_t n0, std::size_t n1);

/// The index-th labeled bipartite tree (0 <= index < scoins_count). The index
/// encodes a pair of words (A0-word of length n1-1, A1-word of length n0-1);
/// decoding runs Pruefer's smallest-leaf rule, drawing the next neighbour from
/// the word of the leaf's opposite part. Nodes use the build_bipartite layout.
BipartiteGraph bipartite_tree_at(std::size_t n0, std::size_t n1, std::uint64_t index);

/// Every labeled tree on parts (n0, n1), each exactly once.
/// Throws InvalidSize, SizeLimitExceeded (n0 + n1 > kMaxTreeNodes).
void for_each_bipartite_tree(std::size_t n0, std::size_t n1,
                             const std::function<void(const BipartiteGraph&)>& visit);
std::vector<BipartiteGraph> enumerate_bipartite_trees(std::size_t n0, std::size_t n1);

/// The spanning subgraph of K_{n0,n1} holding edge (i, j) iff bit i * n1 + j
/// of mask is set. Connectivity is not checked.
BipartiteGraph bipartite_graph_from_mask(std::size_t n0, std::size_t n1, std::uint64_t mask);

/// Every connected spanning subgraph of K_{n0,n1}, each exactly once.
/// Throws InvalidSize, SizeLimitExceeded (n0 * n1 > kMaxGraphSlots).
void for_each_connected_bipartite_graph(
    std::size_t n0, std::size_t n1,
    const std::function<void(const BipartiteGraph&)>& visit);
std::vector<BipartiteGraph> enumerate_connected_bipartite_graphs(std::size_t n0,
                                                                 std::size_t n1);

/// Every connected labeled graph on n nodes. Throws SizeLimitExceeded for
/// n > kMaxStarNodes.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Every labeled tree on n nodes via Pruefer sequences. Throws
/// SizeLimitExceeded for n > kMaxLabeledTreeNodes.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

struct VerificationReport {
  std::string subject;               // e.g. "trees 4 3"
  std::uint64_t instances = 0;
  Rational best_value;
  std::vector<Edge> best_instance;   // lexicographically smallest maximizer
  NodeId best_root = 0;              // lowest-id maximizing node in it
  Rational target;                   // closed-form value being verified
  bool match = false;                // best_value == target
  std::uint64_t maximizers = 0;      // (graph, node) pairs attaining best
  bool maximizers_isomorphic = false;  // every maximizer is the extremal shape
  double elapsed_seconds = 0.0;
};

/// Max of C1(v;G) over enumerated G and v in A0, compared with
/// closed_form_centralization(n0, n1). Maximizers are checked for rooted
/// isomorphism with H(u; n0, n1). Identical output for every job count.
/// Throws InvalidSize, SizeLimitExceeded.
VerificationReport verify_bipartite_theorem(const EnumerationSpec& spec);

/// Max of C1(v;G) over all connected graphs on n nodes and all v, compared
/// with 1 - (n-1)/(2n-3); maximizers are checked against the star rooted at
/// its centre. Throws InvalidSize (n < 2), SizeLimitExceeded.
VerificationReport verify_star_theorem(std::size_t n, std::size_t jobs = 1);

/// Deterministic text rendering (elapsed time excluded).
std::string render_report(const VerificationReport& report);

/// Exploratory: eigenvector analogue of C1, sum_u [Ce(v) - Ce(u)] =
/// n Ce(v) - 1 under sum-one normalisation, maximised over v in A0.
struct EigenvectorScanReport {
  std::string subject;
  std::string normalization = "sum=1";
  std::uint64_t instances = 0;
  double best_value = 0.0;
  std::vector<Edge> best_instance;
  double extremal_value = 0.0;  // value on H(u; n0, n1)
  bool extremal_attains_max = false;
  std::vector<double> values;   // per instance, kept for small scans only
  std::vector<std::vector<Edge>> counterexamples;  // beat H by more than 1e-9
};

inline constexpr std::size_t kScanValueLimit = 10000;
inline constexpr std::size_t kScanCounterexampleLimit = 20;

EigenvectorScanReport eigenvector_conjecture_scan(const EnumerationSpec& spec,
                                                  double tol = 1e-12);

std::string render_scan(const EigenvectorScanReport& report);

}  // namespace twomode
