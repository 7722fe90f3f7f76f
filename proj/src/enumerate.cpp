#include "twomode/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "twomode/centrality.hpp"
#include "twomode/error.hpp"
#include "twomode/extremal.hpp"
#include "twomode/isomorphism.hpp"

namespace twomode {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_sizes(std::size_t n0, std::size_t n1) {
  if (n0 == 0 || n1 == 0) {
    throw Error(ErrorKind::InvalidSize, "part sizes must be positive");
  }
}

void require_tree_guard(std::size_t n0, std::size_t n1) {
  require_sizes(n0, n1);
  if (n0 + n1 > kMaxTreeNodes) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "trees mode needs n0 + n1 <= " + std::to_string(kMaxTreeNodes));
  }
}

void require_graph_guard(std::size_t n0, std::size_t n1) {
  require_sizes(n0, n1);
  if (n0 * n1 > kMaxGraphSlots) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "graphs mode needs n0 * n1 <= " + std::to_string(kMaxGraphSlots));
  }
}

std::string edge_list_string(const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& [a, b] : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

// Best C1 seen over a slice of the index space. merge() is associative and
// commutative, so the reduction does not depend on how the space was split.
struct Partial {
  std::uint64_t instances = 0;
  std::optional<Rational> best;
  double best_approx = 0.0;
  std::vector<Edge> best_edges;
  NodeId best_root = 0;
  std::uint64_t maximizers = 0;
  bool isomorphic = true;

  // eligible(v): whether v may be the centre; shape(g, v): extremal shape test
  template <typename Eligible, typename Shape>
  void offer(const Graph& g, Eligible eligible, Shape shape) {
    ++instances;
    const auto w = total_distances(g);
    std::uint64_t min_w = 0;
    bool any = false;
    for (NodeId v = 0; v < g.size(); ++v) {
      if (eligible(v) && (!any || w[v] < min_w)) {
        min_w = w[v];
        any = true;
      }
    }
    if (!any) return;
    const double n = static_cast<double>(g.size());
    double approx = n / static_cast<double>(min_w);
    for (std::uint64_t x : w) approx -= 1.0 / static_cast<double>(x);
    if (best && approx < best_approx - 1e-9) return;

    Rational value = Rational(static_cast<std::int64_t>(g.size()),
                              static_cast<std::int64_t>(min_w));
    for (std::uint64_t x : w) value -= reciprocal(x);

    std::vector<NodeId> centres;
    for (NodeId v = 0; v < g.size(); ++v) {
      if (eligible(v) && w[v] == min_w) centres.push_back(v);
    }
    const bool all_shaped = std::all_of(centres.begin(), centres.end(),
                                        [&](NodeId v) { return shape(g, v); });

    if (!best || value > *best) {
      best = value;
      best_approx = approx;
      best_edges = g.edges();
      best_root = centres.front();
      maximizers = centres.size();
      isomorphic = all_shaped;
    } else if (value == *best) {
      maximizers += centres.size();
      isomorphic = isomorphic && all_shaped;
      if (g.edges() < best_edges) {
        best_edges = g.edges();
        best_root = centres.front();
      }
    }
  }

  void merge(const Partial& o) {
    instances += o.instances;
    if (!o.best) return;
    if (!best || *o.best > *best) {
      const auto count = instances;
      *this = o;
      instances = count;
    } else if (*o.best == *best) {
      maximizers += o.maximizers;
      isomorphic = isomorphic && o.isomorphic;
      if (o.best_edges < best_edges) {
        best_edges = o.best_edges;
        best_root = o.best_root;
      }
    }
  }
};

// Splits [0, total) into `jobs` contiguous slices and reduces in slice order.
template <typename Work>
Partial run_partitioned(std::uint64_t total, std::size_t jobs, Work work) {
  jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));
  std::vector<Partial> partials(jobs);
  const auto bound = [&](std::size_t k) { return total / jobs * k + std::min<std::uint64_t>(k, total % jobs); };
  if (jobs == 1) {
    work(0, total, partials[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t k = 0; k < jobs; ++k) {
      threads.emplace_back([&, k] { work(bound(k), bound(k + 1), partials[k]); });
    }
    for (auto& t : threads) t.join();
  }
  Partial out;
  for (const auto& p : partials) out.merge(p);
  return out;
}

VerificationReport finish(std::string subject, const Partial& p, Rational target,
                          std::chrono::steady_clock::time_point start) {
  VerificationReport r;
  r.subject = std::move(subject);
  r.instances = p.instances;
  if (p.best) r.best_value = *p.best;
  r.best_instance = p.best_edges;
  r.best_root = p.best_root;
  r.target = std::move(target);
  r.match = p.best && *p.best == r.target;
  r.maximizers = p.maximizers;
  r.maximizers_isomorphic = p.best && p.isomorphic;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Edge> complete_graph_slots(std::size_t n) {
  std::vector<Edge> slots;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  return slots;
}

Graph graph_from_mask(std::size_t n, const std::vector<Edge>& slots, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (mask >> i & 1U) edges.push_back(slots[i]);
  }
  return Graph(n, edges);
}

// Cheap connectivity on a slot mask before building a Graph.
bool mask_connected(std::size_t n, const std::vector<Edge>& slots, std::uint64_t mask) {
  std::vector<NodeId> parent(n);
  for (NodeId v = 0; v < n; ++v) parent[v] = v;
  const auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    const NodeId a = find(slots[i].first);
    const NodeId b = find(slots[i].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<Edge> bipartite_slots(std::size_t n0, std::size_t n1) {
  std::vector<Edge> slots;
  for (NodeId i = 0; i < n0; ++i) {
    for (NodeId j = 0; j < n1; ++j) slots.emplace_back(i, n0 + j);
  }
  return slots;
}

std::vector<Part> canonical_parts(std::size_t n0, std::size_t n1) {
  std::vector<Part> parts(n0, Part::A0);
  parts.resize(n0 + n1, Part::A1);
  return parts;
}

}  // namespace

std::uint64_t scoins_count(std::size_t n0, std::size_t n1) {
  require_sizes(n0, n1);
  return ipow(n0, n1 - 1) * ipow(n1, n0 - 1);
}

BipartiteGraph bipartite_tree_at(std::size_t n0, std::size_t n1, std::uint64_t index) {
  require_tree_guard(n0, n1);
  const std::size_t n = n0 + n1;
  const std::uint64_t b_space = ipow(n1, n0 - 1);
  if (index >= scoins_count(n0, n1)) {
    throw Error(ErrorKind::IndexOutOfRange, "tree index " + std::to_string(index));
  }
  std::uint64_t a_index = index / b_space;
  std::uint64_t b_index = index % b_space;

  // a_word: neighbours (in A0) of removed A1 leaves; b_word: the converse.
  std::vector<NodeId> a_word(n1 - 1), b_word(n0 - 1);
  for (auto it = a_word.rbegin(); it != a_word.rend(); ++it) {
    *it = a_index % n0;
    a_index /= n0;
  }
  for (auto it = b_word.rbegin(); it != b_word.rend(); ++it) {
    *it = n0 + b_index % n1;
    b_index /= n1;
  }

  std::vector<std::size_t> pending(n, 0);
  for (NodeId v : a_word) ++pending[v];
  for (NodeId v : b_word) ++pending[v];
  std::vector<bool> removed(n, false);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ia = 0, ib = 0;
  for (std::size_t step = 0; step + 2 < n; ++step) {
    NodeId leaf = 0;
    while (removed[leaf] || pending[leaf] > 0) ++leaf;
    const NodeId nbr = leaf >= n0 ? a_word.at(ia++) : b_word.at(ib++);
    edges.emplace_back(leaf, nbr);
    removed[leaf] = true;
    --pending[nbr];
  }
  std::vector<NodeId> last;
  for (NodeId v = 0; v < n; ++v) {
    if (!removed[v]) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return BipartiteGraph(canonical_parts(n0, n1), edges);
}

void for_each_bipartite_tree(std::size_t n0, std::size_t n1,
                             const std::function<void(const BipartiteGraph&)>& visit) {
  require_tree_guard(n0, n1);
  const std::uint64_t total = scoins_count(n0, n1);
  for (std::uint64_t i = 0; i < total; ++i) visit(bipartite_tree_at(n0, n1, i));
}

std::vector<BipartiteGraph> enumerate_bipartite_trees(std::size_t n0, std::size_t n1) {
  std::vector<BipartiteGraph> out;
  for_each_bipartite_tree(n0, n1, [&](const BipartiteGraph& g) { out.push_back(g); });
  return out;
}

BipartiteGraph bipartite_graph_from_mask(std::size_t n0, std::size_t n1,
                                         std::uint64_t mask) {
  require_graph_guard(n0, n1);
  const auto slots = bipartite_slots(n0, n1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (mask >> i & 1U) edges.push_back(slots[i]);
  }
  return BipartiteGraph(canonical_parts(n0, n1), edges);
}

void for_each_connected_bipartite_graph(
    std::size_t n0, std::size_t n1,
    const std::function<void(const BipartiteGraph&)>& visit) {
  require_graph_guard(n0, n1);
  const auto slots = bipartite_slots(n0, n1);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (mask_connected(n0 + n1, slots, mask)) visit(bipartite_graph_from_mask(n0, n1, mask));
  }
}

std::vector<BipartiteGraph> enumerate_connected_bipartite_graphs(std::size_t n0,
                                                                 std::size_t n1) {
  std::vector<BipartiteGraph> out;
  for_each_connected_bipartite_graph(n0, n1,
                                     [&](const BipartiteGraph& g) { out.push_back(g); });
  return out;
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0) throw Error(ErrorKind::InvalidSize, "graph needs at least one node");
  if (n > kMaxStarNodes) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "all-graphs enumeration needs n <= " + std::to_string(kMaxStarNodes));
  }
  const auto slots = complete_graph_slots(n);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (mask_connected(n, slots, mask)) visit(graph_from_mask(n, slots, mask));
  }
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0) throw Error(ErrorKind::InvalidSize, "tree needs at least one node");
  if (n > kMaxLabeledTreeNodes) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "labeled tree enumeration needs n <= " + std::to_string(kMaxLabeledTreeNodes));
  }
  if (n <= 2) {
    std::vector<Edge> edges;
    if (n == 2) edges.emplace_back(0, 1);
    visit(Graph(n, edges));
    return;
  }
  const std::uint64_t total = ipow(n, n - 2);
  std::vector<NodeId> seq(n - 2);
  std::vector<std::size_t> pending(n);
  std::vector<bool> removed(n);
  std::vector<Edge> edges;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      *it = c % n;
      c /= n;
    }
    std::fill(pending.begin(), pending.end(), 0);
    std::fill(removed.begin(), removed.end(), false);
    for (NodeId v : seq) ++pending[v];
    edges.clear();
    for (NodeId nbr : seq) {
      NodeId leaf = 0;
      while (removed[leaf] || pending[leaf] > 0) ++leaf;
      edges.emplace_back(leaf, nbr);
      removed[leaf] = true;
      --pending[nbr];
    }
    NodeId a = 0;
    while (removed[a]) ++a;
    NodeId b = a + 1;
    while (removed[b]) ++b;
    edges.emplace_back(a, b);
    visit(Graph(n, edges));
  }
}

VerificationReport verify_bipartite_theorem(const EnumerationSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n0 = spec.n0, n1 = spec.n1;
  const bool trees = spec.mode == EnumerationMode::Trees;
  if (trees) {
    require_tree_guard(n0, n1);
  } else {
    require_graph_guard(n0, n1);
  }

  const ExtremalTree h = build_extremal_tree(n0, n1);
  const std::string h_form = rooted_canonical_form(h.graph.graph(), h.root);
  const auto h_degrees = degree_multiset(h.graph.graph());
  const auto eligible = [n0](NodeId v) { return v < n0; };
  const auto shape = [&](const Graph& g, NodeId v) {
    return is_tree(g) && degree_multiset(g) == h_degrees &&
           rooted_canonical_form(g, v) == h_form;
  };

  Partial result;
  if (trees) {
    result = run_partitioned(scoins_count(n0, n1), spec.jobs,
                             [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
                               for (std::uint64_t i = lo; i < hi; ++i) {
                                 out.offer(bipartite_tree_at(n0, n1, i).graph(), eligible, shape);
                               }
                             });
  } else {
    const auto slots = bipartite_slots(n0, n1);
    result = run_partitioned(std::uint64_t{1} << slots.size(), spec.jobs,
                             [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
                               for (std::uint64_t mask = lo; mask < hi; ++mask) {
                                 if (!mask_connected(n0 + n1, slots, mask)) continue;
                                 out.offer(bipartite_graph_from_mask(n0, n1, mask).graph(),
                                           eligible, shape);
                               }
                             });
  }
  std::string subject = std::string(trees ? "trees " : "graphs ") + std::to_string(n0) +
                        " " + std::to_string(n1);
  return finish(std::move(subject), result, closed_form_centralization(n0, n1), start);
}

VerificationReport verify_star_theorem(std::size_t n, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 2) throw Error(ErrorKind::InvalidSize, "star theorem needs n >= 2");
  if (n > kMaxStarNodes) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "star theorem needs n <= " + std::to_string(kMaxStarNodes));
  }
  std::vector<Edge> star_edges;
  for (NodeId v = 1; v < n; ++v) star_edges.emplace_back(0, v);
  const Graph star(n, star_edges);
  const std::string star_form = rooted_canonical_form(star, 0);
  const auto star_degrees = degree_multiset(star);
  const auto eligible = [](NodeId) { return true; };
  const auto shape = [&](const Graph& g, NodeId v) {
    return is_tree(g) && degree_multiset(g) == star_degrees &&
           rooted_canonical_form(g, v) == star_form;
  };

  const auto slots = complete_graph_slots(n);
  const Partial result = run_partitioned(
      std::uint64_t{1} << slots.size(), jobs,
      [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          if (!mask_connected(n, slots, mask)) continue;
          out.offer(graph_from_mask(n, slots, mask), eligible, shape);
        }
      });
  const auto k = static_cast<std::int64_t>(n);
  return finish("star " + std::to_string(n), result,
                Rational(1) - Rational(k - 1, 2 * k - 3), start);
}

std::string render_report(const VerificationReport& r) {
  std::ostringstream os;
  os << "subject: " << r.subject << '\n'
     << "instances: " << r.instances << '\n'
     << "best: " << r.best_value.str() << " (" << r.best_value.to_decimal(12) << ")\n"
     << "target: " << r.target.str() << " (" << r.target.to_decimal(12) << ")\n"
     << "verdict: " << (r.match ? "match" : "mismatch") << '\n'
     << "best_instance: " << edge_list_string(r.best_instance) << '\n'
     << "best_root: " << r.best_root << '\n'
     << "maximizers: " << r.maximizers << '\n'
     << "maximizers_isomorphic: " << (r.maximizers_isomorphic ? "yes" : "no") << '\n';
  return os.str();
}

EigenvectorScanReport eigenvector_conjecture_scan(const EnumerationSpec& spec, double tol) {
  const std::size_t n0 = spec.n0, n1 = spec.n1;
  const bool trees = spec.mode == EnumerationMode::Trees;
  if (trees) {
    require_tree_guard(n0, n1);
  } else {
    require_graph_guard(n0, n1);
  }

  const auto value_of = [&](const BipartiteGraph& g) {
    const auto ce = eigenvector_centrality(g.graph(), tol);
    double best = -1.0;
    for (NodeId v : g.nodes_in(Part::A0)) {
      best = std::max(best, static_cast<double>(g.size()) * ce[v] - 1.0);
    }
    return best;
  };

  EigenvectorScanReport report;
  report.subject = std::string(trees ? "trees " : "graphs ") + std::to_string(n0) + " " +
                   std::to_string(n1);
  report.extremal_value = value_of(build_extremal_tree(n0, n1).graph);
  bool first = true;
  const auto visit = [&](const BipartiteGraph& g) {
    const double value = value_of(g);
    ++report.instances;
    if (report.values.size() < kScanValueLimit) report.values.push_back(value);
    if (first || value > report.best_value + 1e-12 ||
        (std::abs(value - report.best_value) <= 1e-12 &&
         g.graph().edges() < report.best_instance)) {
      report.best_value = value;
      report.best_instance = g.graph().edges();
      first = false;
    }
    if (value > report.extremal_value + 1e-9 &&
        report.counterexamples.size() < kScanCounterexampleLimit) {
      report.counterexamples.push_back(g.graph().edges());
    }
  };
  if (trees) {
    for_each_bipartite_tree(n0, n1, visit);
  } else {
    for_each_connected_bipartite_graph(n0, n1, visit);
  }
  report.extremal_attains_max = report.best_value <= report.extremal_value + 1e-9;
  if (report.values.size() >= kScanValueLimit && report.instances > kScanValueLimit) {
    report.values.clear();
  }
  return report;
}

std::string render_scan(const EigenvectorScanReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << std::fixed;
  os << "subject: " << r.subject << " (exploratory)\n"
     << "normalization: " << r.normalization << '\n'
     << "instances: " << r.instances << '\n'
     << "best: " << r.best_value << '\n'
     << "best_instance: " << edge_list_string(r.best_instance) << '\n'
     << "extremal_value: " << r.extremal_value << '\n'
     << "extremal_attains_max: " << (r.extremal_attains_max ? "yes" : "no") << '\n'
     << "counterexample_candidates: " << r.counterexamples.size() << '\n';
  for (const auto& edges : r.counterexamples) os << "  " << edge_list_string(edges) << '\n';
  if (!r.values.empty()) {
    os << "values:";
    for (double v : r.values) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace twomode
