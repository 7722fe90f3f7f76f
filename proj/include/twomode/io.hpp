#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twomode/graph.hpp"
#include "twomode/rational.hpp"

namespace twomode {

/// Rows of (left label, right label) in file order.
struct TwoModeEdgeList {
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> comments;  // text after '#', without the marker
};

/// One row per non-blank, non-comment line. A line containing a tab is split
/// on tabs (labels may then contain spaces); otherwise on runs of spaces.
/// Exactly two non-empty fields are required.
/// Throws MalformedLine (message carries the 1-based line number),
/// DuplicatePair, LabelInBothParts.
TwoModeEdgeList parse_two_mode(std::string_view text);

/// Reads and parses a file. Throws Io plus everything parse_two_mode throws.
TwoModeEdgeList read_two_mode(const std::filesystem::path& path);

/// Left labels become A0 in first-appearance order, then right labels A1.
BipartiteGraph to_bipartite(const TwoModeEdgeList& list);

struct AnalysisRow {
  std::string label;
  Part part = Part::A0;
  std::uint64_t total_distance = 0;
  Rational closeness;
  Rational centralization;
};

/// Rows for one part, sorted by descending C1 then ascending label. C1 is
/// taken over all nodes of the graph.
struct Analysis {
  std::vector<AnalysisRow> rows;
  std::vector<std::string> argmax;  // labels attaining the maximum C1
};

/// Throws DisconnectedGraph, InvalidSize.
Analysis analyze(const BipartiteGraph& g, Part part);

enum class Format { Table, Csv, Json };

std::string render(const Analysis& analysis, Format format, int precision);

/// H(0; n0, n1) as rows (A0 label, A1 label) with labels "0", "1".."n1" for
/// the root and spokes and "n1+1".. for the leaves.
TwoModeEdgeList extremal_edge_list(std::size_t n0, std::size_t n1);

/// One tab-separated row per line, preceded by `#` comment lines.
std::string format_two_mode(const TwoModeEdgeList& list);

/// Writes extremal_edge_list(n0, n1). Throws InvalidSize, Io.
TwoModeEdgeList emit_extremal(std::size_t n0, std::size_t n1,
                              const std::filesystem::path& path);

}  // namespace twomode
