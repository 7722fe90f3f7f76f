// Command-line front end for the twomode library.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twomode/centrality.hpp"
#include "twomode/enumerate.hpp"
#include "twomode/error.hpp"
#include "twomode/extremal.hpp"
#include "twomode/io.hpp"
#include "twomode/transforms.hpp"

namespace {

using namespace twomode;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;

json labeled_edges(const BipartiteGraph& g) {
  json out = json::array();
  for (const auto& [a, b] : g.graph().edges()) {
    const NodeId left = g.part(a) == Part::A0 ? a : b;
    const NodeId right = left == a ? b : a;
    out.push_back({g.graph().label(left), g.graph().label(right)});
  }
  return out;
}

json label_set(const BipartiteGraph& g, const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (NodeId v : nodes) out.push_back(g.graph().label(v));
  return out;
}

json clause_json(const ClauseResult& c) {
  json out = {{"status", std::string(to_string(c.status))}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

int run_transform(const std::string& file, const std::string& root_label) {
  const BipartiteGraph input = to_bipartite(read_two_mode(file));
  const auto& labels = input.graph().labels();
  const auto it = std::find(labels.begin(), labels.end(), root_label);
  if (it == labels.end()) {
    throw Error(ErrorKind::IndexOutOfRange, "unknown root label " + root_label);
  }
  const auto root = static_cast<NodeId>(it - labels.begin());
  if (!is_connected(input.graph())) {
    throw Error(ErrorKind::DisconnectedGraph, "input graph is disconnected");
  }

  json doc;
  doc["root"] = root_label;
  const bool reduced = !is_tree(input.graph());
  const BipartiteGraph tree = reduced ? bfs_spanning_tree(input, root) : input;
  doc["bfs_tree_applied"] = reduced;
  if (reduced) {
    doc["c1_input"] = centralization(input.graph(), root).str();
  }
  doc["before"] = labeled_edges(tree);

  const auto ctx = build_flatten_context(tree, root);
  if (!ctx) {
    doc["context"] = nullptr;
    doc["after"] = doc["before"];
    doc["audit"] = nullptr;
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }
  const BipartiteGraph after = apply_flatten(tree, root, *ctx);
  doc["after"] = labeled_edges(after);
  doc["context"] = {{"z", tree.graph().label(ctx->z)},
                    {"w", tree.graph().label(ctx->w)},
                    {"ys", label_set(tree, ctx->ys)},
                    {"Y", label_set(tree, ctx->Y)},
                    {"P", label_set(tree, ctx->P)},
                    {"Pprime", label_set(tree, ctx->Pprime)},
                    {"S", label_set(tree, ctx->S)},
                    {"Sprime", label_set(tree, ctx->Sprime)},
                    {"R", label_set(tree, ctx->R)},
                    {"heavy_w", ctx->heavy_w}};
  const FlattenAudit audit = audit_transform(tree, after, *ctx);
  json clauses = json::object();
  static constexpr const char* kNames[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  for (std::size_t k = 0; k < audit.lemma2.size(); ++k) {
    clauses[kNames[k]] = clause_json(audit.lemma2[k]);
  }
  doc["audit"] = {{"distance_clauses", clauses},
                  {"relative_drop_clause", clause_json(audit.lemma3)},
                  {"c1_before", audit.c1_before.str()},
                  {"c1_after", audit.c1_after.str()},
                  {"c1_before_dec", audit.c1_before.to_decimal(6)},
                  {"c1_after_dec", audit.c1_after.to_decimal(6)},
                  {"increased", audit.increased()}};
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int run_verify(const VerificationReport& report) {
  std::cout << render_report(report);
  std::fprintf(stderr, "elapsed: %.3f s\n", report.elapsed_seconds);
  return report.match && report.maximizers_isomorphic ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closeness centralization tools for two-mode networks"};
  app.require_subcommand(1);

  std::string file;
  std::string part = "left";
  std::string format = "table";
  int precision = 5;
  auto* analyze_cmd = app.add_subcommand("analyze", "C and C1 for one part of an edge list");
  analyze_cmd->add_option("FILE", file, "two-mode edge list")->required();
  analyze_cmd->add_option("--part", part, "left|right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  analyze_cmd->add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  analyze_cmd->add_option("--precision", precision, "decimal places")
      ->check(CLI::Range(0, 60));

  std::size_t n0 = 0, n1 = 0;
  std::optional<std::string> emit_path;
  auto* extremal_cmd = app.add_subcommand("extremal", "edge list of the extremal tree");
  extremal_cmd->add_option("N0", n0)->required();
  extremal_cmd->add_option("N1", n1)->required();
  extremal_cmd->add_option("--emit", emit_path, "write the edge list to FILE");

  auto* closed_cmd = app.add_subcommand("closed-form", "exact C1 at the extremal root");
  closed_cmd->add_option("N0", n0)->required();
  closed_cmd->add_option("N1", n1)->required();

  auto* bound_cmd = app.add_subcommand("bound", "lower bound and limit for a given n1");
  bound_cmd->add_option("N1", n1)->required();

  std::size_t jobs = 1;
  std::size_t star_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive maximum check");
  verify_cmd->require_subcommand(1);
  auto* verify_trees = verify_cmd->add_subcommand("trees", "all labeled bipartite trees");
  auto* verify_graphs =
      verify_cmd->add_subcommand("graphs", "all connected bipartite graphs");
  for (auto* cmd : {verify_trees, verify_graphs}) {
    cmd->add_option("N0", n0)->required();
    cmd->add_option("N1", n1)->required();
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  }
  auto* verify_star = verify_cmd->add_subcommand("star", "all connected graphs on N nodes");
  verify_star->add_option("N", star_n)->required();
  verify_star->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  double tol = 1e-12;
  auto* scan_cmd =
      app.add_subcommand("scan-eigenvector", "exploratory eigenvector centralization scan");
  scan_cmd->add_option("N0", n0)->required();
  scan_cmd->add_option("N1", n1)->required();
  scan_cmd->add_option("--tol", tol, "power iteration tolerance")
      ->check(CLI::PositiveNumber);

  std::string root_label;
  auto* transform_cmd = app.add_subcommand("transform", "one flattening step with audit");
  transform_cmd->add_option("FILE", file)->required();
  transform_cmd->add_option("--root", root_label)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze_cmd) {
      const auto g = to_bipartite(read_two_mode(file));
      const auto analysis = analyze(g, part == "left" ? Part::A0 : Part::A1);
      const Format fmt = format == "csv"    ? Format::Csv
                         : format == "json" ? Format::Json
                                            : Format::Table;
      std::cout << render(analysis, fmt, precision);
      return kExitOk;
    }
    if (*extremal_cmd) {
      if (emit_path) {
        const auto list = emit_extremal(n0, n1, *emit_path);
        std::cout << "wrote " << list.rows.size() << " edges to " << *emit_path << '\n';
      } else {
        std::cout << format_two_mode(extremal_edge_list(n0, n1));
      }
      return kExitOk;
    }
    if (*closed_cmd) {
      const auto params = extremal_params(n0, n1);
      const Rational value = closed_form_centralization(n0, n1);
      std::cout << "n0: " << n0 << "\nn1: " << n1 << "\nm: " << params.m
                << "\np: " << params.p << "\nr: " << params.r
                << "\nW(root): " << closed_form_root_distance(n0, n1)
                << "\nC1: " << value.str() << "\nC1_dec: " << value.to_decimal(12) << '\n';
      if (params.r > 0) {
        const bool agree = closed_form_centralization_reduced(n0, n1) == value;
        std::cout << "reduced_form_agrees: " << (agree ? "yes" : "no") << '\n';
        if (!agree) return kExitMismatch;
      }
      return kExitOk;
    }
    if (*bound_cmd) {
      const Rational lb = lower_bound(n1);
      const Rational lim = asymptotic_limit(n1);
      std::cout << "n1: " << n1 << "\nlower_bound: " << lb.str() << " ("
                << lb.to_decimal(12) << ")\nasymptotic_limit: " << lim.str() << " ("
                << lim.to_decimal(12) << ")\n";
      return kExitOk;
    }
    if (*verify_trees || *verify_graphs) {
      EnumerationSpec spec{n0, n1,
                           *verify_trees ? EnumerationMode::Trees
                                         : EnumerationMode::ConnectedGraphs,
                           jobs};
      return run_verify(verify_bipartite_theorem(spec));
    }
    if (*verify_star) return run_verify(verify_star_theorem(star_n, jobs));
    if (*scan_cmd) {
      const auto start = std::chrono::steady_clock::now();
      const auto report = eigenvector_conjecture_scan({n0, n1, EnumerationMode::Trees, 1}, tol);
      std::cout << render_scan(report);
      std::fprintf(stderr, "elapsed: %.3f s\n",
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                       .count());
      return kExitOk;
    }
    if (*transform_cmd) return run_transform(file, root_label);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
