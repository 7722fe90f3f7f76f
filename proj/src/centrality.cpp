#include "twomode/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "twomode/error.hpp"

namespace twomode {

Rational closeness(const Graph& g, NodeId v) {
  const std::uint64_t w = total_distance(g, v);
  if (w == 0) {
    throw Error(ErrorKind::InvalidSize, "closeness of a single-node graph");
  }
  return reciprocal(w);
}

Rational centralization(const Graph& g, NodeId v) {
  if (v >= g.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(v));
  }
  if (g.size() == 1) return Rational(0);
  const auto report = centrality_report(g);
  return report.nodes[v].centralization;
}

CentralityReport centrality_report(const Graph& g) {
  CentralityReport report;
  const auto w = total_distances(g);
  report.nodes.resize(g.size());
  if (g.size() == 1) {
    report.nodes[0] = {0, 0, Rational(0), Rational(0)};
    return report;
  }
  for (NodeId v = 0; v < g.size(); ++v) {
    report.nodes[v].node = v;
    report.nodes[v].total_distance = w[v];
    report.nodes[v].closeness = reciprocal(w[v]);
    report.closeness_sum += report.nodes[v].closeness;
  }
  const Rational n(static_cast<std::int64_t>(g.size()));
  for (auto& row : report.nodes) {
    row.centralization = n * row.closeness - report.closeness_sum;
  }
  return report;
}

PartMaximum part_max_centralization(const BipartiteGraph& g, Part part) {
  return part_max_centralization(g, part, centrality_report(g.graph()));
}

PartMaximum part_max_centralization(const BipartiteGraph& g, Part part,
                                    const CentralityReport& report) {
  PartMaximum best;
  for (NodeId v : g.nodes_in(part)) {
    const Rational& value = report.nodes[v].centralization;
    if (best.ties.empty() || value > best.value) {
      best.ties = {v};
      best.value = value;
    } else if (value == best.value) {
      best.ties.push_back(v);
    }
  }
  if (best.ties.empty()) {
    throw Error(ErrorKind::InvalidSize, "part is empty");
  }
  return best;
}

std::vector<double> eigenvector_centrality(const Graph& g, double tol,
                                           std::size_t max_iterations) {
  const auto n = static_cast<Eigen::Index>(g.size());
  if (n == 0) return {};
  if (!is_connected(g)) {
    throw Error(ErrorKind::DisconnectedGraph, "eigenvector centrality");
  }

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(2 * g.edge_count() + g.size());
  for (Eigen::Index v = 0; v < n; ++v) entries.emplace_back(v, v, 1.0);
  for (auto [a, b] : g.edges()) {
    const auto ia = static_cast<Eigen::Index>(a);
    const auto ib = static_cast<Eigen::Index>(b);
    entries.emplace_back(ia, ib, 1.0);
    entries.emplace_back(ib, ia, 1.0);
  }
  Eigen::SparseMatrix<double> shifted(n, n);
  shifted.setFromTriplets(entries.begin(), entries.end());

  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (std::size_t it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd next = shifted * x;
    next /= next.sum();
    const double change = (next - x).lpNorm<1>();
    x = std::move(next);
    if (change < tol) {
      return std::vector<double>(x.data(), x.data() + n);
    }
  }
  throw Error(ErrorKind::NonConvergence,
              "power iteration did not reach tol " + std::to_string(tol) +
                  " in " + std::to_string(max_iterations) + " steps");
}

bool max_degree_property_check(const Graph& g) {
  const auto w = total_distances(g);
  const auto min_w = *std::min_element(w.begin(), w.end());
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < g.size(); ++v) max_deg = std::max(max_deg, g.degree(v));
  for (NodeId v = 0; v < g.size(); ++v) {
    if (w[v] == min_w && g.degree(v) != max_deg) return false;
  }
  return true;
}

}  // namespace twomode
