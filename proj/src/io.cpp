#include "twomode/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "twomode/centrality.hpp"
#include "twomode/error.hpp"
#include "twomode/extremal.hpp"

namespace twomode {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  if (line.find('\t') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      const auto field = trim(line.substr(start, tab == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : tab - start));
      if (!field.empty()) fields.emplace_back(field);
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
  } else {
    std::istringstream is{std::string(line)};
    std::string field;
    while (is >> field) fields.push_back(field);
  }
  return fields;
}

std::string_view part_name(Part p) { return p == Part::A0 ? "left" : "right"; }

nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}};
}

}  // namespace

TwoModeEdgeList parse_two_mode(std::string_view text) {
  TwoModeEdgeList list;
  std::set<std::pair<std::string, std::string>> seen;
  std::set<std::string> left, right;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      list.comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw Error(ErrorKind::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected 2 fields, got " +
                      std::to_string(fields.size()));
    }
    if (!seen.emplace(fields[0], fields[1]).second) {
      throw Error(ErrorKind::DuplicatePair, "line " + std::to_string(line_no) + ": " +
                                                fields[0] + " / " + fields[1]);
    }
    left.insert(fields[0]);
    right.insert(fields[1]);
    if (right.contains(fields[0]) || left.contains(fields[1])) {
      const auto& label = right.contains(fields[0]) ? fields[0] : fields[1];
      throw Error(ErrorKind::LabelInBothParts,
                  "line " + std::to_string(line_no) + ": " + label);
    }
    list.rows.emplace_back(std::move(fields[0]), std::move(fields[1]));
  }
  return list;
}

TwoModeEdgeList read_two_mode(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_two_mode(buffer.str());
}

BipartiteGraph to_bipartite(const TwoModeEdgeList& list) {
  std::map<std::string, NodeId> left_index, right_index;
  std::vector<std::string> left_labels, right_labels;
  for (const auto& [l, r] : list.rows) {
    if (left_index.emplace(l, left_labels.size()).second) left_labels.push_back(l);
    if (right_index.emplace(r, right_labels.size()).second) right_labels.push_back(r);
  }
  std::vector<Edge> edges;
  edges.reserve(list.rows.size());
  for (const auto& [l, r] : list.rows) edges.emplace_back(left_index[l], right_index[r]);
  std::vector<std::string> labels = left_labels;
  labels.insert(labels.end(), right_labels.begin(), right_labels.end());
  return build_bipartite(left_labels.size(), right_labels.size(), edges, std::move(labels));
}

Analysis analyze(const BipartiteGraph& g, Part part) {
  const auto report = centrality_report(g.graph());
  Analysis out;
  for (NodeId v : g.nodes_in(part)) {
    const auto& c = report.nodes[v];
    out.rows.push_back({g.graph().label(v), part, c.total_distance, c.closeness,
                        c.centralization});
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const AnalysisRow& a, const AnalysisRow& b) {
    if (a.centralization != b.centralization) return a.centralization > b.centralization;
    return a.label < b.label;
  });
  for (const auto& row : out.rows) {
    if (row.centralization != out.rows.front().centralization) break;
    out.argmax.push_back(row.label);
  }
  return out;
}

std::string render(const Analysis& analysis, Format format, int precision) {
  std::ostringstream os;
  switch (format) {
    case Format::Table: {
      std::size_t width = 5;
      for (const auto& row : analysis.rows) width = std::max(width, row.label.size());
      const auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
      };
      const std::size_t num_w = static_cast<std::size_t>(std::max(precision, 0)) + 4;
      os << pad("label", width) << "  " << pad("part", 5) << "  " << pad("W", 6) << "  "
         << pad("C", num_w) << "  C1\n";
      for (const auto& row : analysis.rows) {
        os << pad(row.label, width) << "  " << pad(std::string(part_name(row.part)), 5)
           << "  " << pad(std::to_string(row.total_distance), 6) << "  "
           << pad(row.closeness.to_decimal(precision), num_w) << "  "
           << row.centralization.to_decimal(precision) << '\n';
      }
      os << "argmax:";
      for (const auto& label : analysis.argmax) os << ' ' << label;
      os << '\n';
      break;
    }
    case Format::Csv: {
      os << "label,part,W,C,C1\n";
      for (const auto& row : analysis.rows) {
        std::string label = row.label;
        if (label.find_first_of(",\"") != std::string::npos) {
          std::string quoted = "\"";
          for (char ch : label) {
            if (ch == '"') quoted += '"';
            quoted += ch;
          }
          label = quoted + "\"";
        }
        os << label << ',' << part_name(row.part) << ',' << row.total_distance << ','
           << row.closeness.to_decimal(precision) << ','
           << row.centralization.to_decimal(precision) << '\n';
      }
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["nodes"] = nlohmann::ordered_json::array();
      for (const auto& row : analysis.rows) {
        doc["nodes"].push_back({{"label", row.label},
                                {"part", part_name(row.part)},
                                {"W", row.total_distance},
                                {"C", rational_json(row.closeness)},
                                {"C1", rational_json(row.centralization)},
                                {"C_dec", row.closeness.to_decimal(precision)},
                                {"C1_dec", row.centralization.to_decimal(precision)}});
      }
      doc["argmax"] = analysis.argmax;
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

TwoModeEdgeList extremal_edge_list(std::size_t n0, std::size_t n1) {
  const auto h = build_extremal_tree(n0, n1);
  const Graph& g = h.graph.graph();
  TwoModeEdgeList list;
  list.comments.push_back("extremal tree H(0; " + std::to_string(n0) + ", " +
                          std::to_string(n1) + "), root 0");
  for (const auto& [a, b] : g.edges()) {
    const NodeId left = h.graph.part(a) == Part::A0 ? a : b;
    const NodeId right = left == a ? b : a;
    list.rows.emplace_back(g.label(left), g.label(right));
  }
  return list;
}

std::string format_two_mode(const TwoModeEdgeList& list) {
  std::string out;
  for (const auto& c : list.comments) out += "# " + c + "\n";
  for (const auto& [l, r] : list.rows) out += l + "\t" + r + "\n";
  return out;
}

TwoModeEdgeList emit_extremal(std::size_t n0, std::size_t n1,
                              const std::filesystem::path& path) {
  auto list = extremal_edge_list(n0, n1);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << format_two_mode(list);
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path.string());
  return list;
}

}  // namespace twomode
