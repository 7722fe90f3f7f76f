#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>

#include "support/expect_error.hpp"
#include "twomode/centrality.hpp"
#include "twomode/extremal.hpp"
#include "twomode/io.hpp"

namespace twomode {
namespace {

const std::filesystem::path kData = TWOMODE_DATA_DIR;

TEST(ParseTest, Fig1Fixture) {
  const auto list = read_two_mode(kData / "fig1.tsv");
  EXPECT_EQ(list.rows.size(), 7u);
  const auto g = to_bipartite(list);
  EXPECT_EQ(g.n0(), 3u);
  EXPECT_EQ(g.n1(), 4u);
  EXPECT_EQ(g.graph().label(0), "S0");
  EXPECT_EQ(g.graph().label(3), "L0");
}

TEST(ParseTest, DavisFixture) {
  const auto list = read_two_mode(kData / "davis.tsv");
  EXPECT_EQ(list.rows.size(), 89u);
  const auto g = to_bipartite(list);
  EXPECT_EQ(g.n0(), 18u);
  EXPECT_EQ(g.n1(), 14u);
  EXPECT_TRUE(is_connected(g.graph()));
  EXPECT_FALSE(list.comments.empty());
}

TEST(ParseTest, FieldSplitting) {
  const auto spaces = parse_two_mode("# header\n\n  a   b  \nc d\r\n");
  ASSERT_EQ(spaces.rows.size(), 2u);
  EXPECT_EQ(spaces.rows[0], std::make_pair(std::string("a"), std::string("b")));
  EXPECT_EQ(spaces.comments, std::vector<std::string>{"header"});
  const auto tabs = parse_two_mode("Mrs. Evelyn Jefferson\tJune 27th\n");
  EXPECT_EQ(tabs.rows[0].first, "Mrs. Evelyn Jefferson");
  EXPECT_EQ(tabs.rows[0].second, "June 27th");
}

TEST(ParseTest, Errors) {
  EXPECT_ERROR_KIND(parse_two_mode("Evelyn\n"), ErrorKind::MalformedLine);
  EXPECT_ERROR_KIND(parse_two_mode("a b c\n"), ErrorKind::MalformedLine);
  EXPECT_ERROR_KIND(parse_two_mode("a b\na b\n"), ErrorKind::DuplicatePair);
  EXPECT_ERROR_KIND(parse_two_mode("a b\nb c\n"), ErrorKind::LabelInBothParts);
  EXPECT_ERROR_KIND(parse_two_mode("a b\nc a\n"), ErrorKind::LabelInBothParts);
  EXPECT_ERROR_KIND(read_two_mode(kData / "missing.tsv"), ErrorKind::Io);
  try {
    parse_two_mode("a b\n# c\nbad\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(AnalyzeTest, Fig1RightPart) {
  const auto a = analyze(to_bipartite(read_two_mode(kData / "fig1.tsv")), Part::A1);
  ASSERT_EQ(a.rows.size(), 4u);
  EXPECT_EQ(a.rows[0].label, "L2");
  EXPECT_EQ(a.rows[0].centralization.to_decimal(4), "0.2000");
  EXPECT_EQ(a.rows[1].label, "L0");  // ties sorted by label
  EXPECT_EQ(a.argmax, std::vector<std::string>{"L2"});
}

TEST(AnalyzeTest, DavisTopRows) {
  const auto g = to_bipartite(read_two_mode(kData / "davis.tsv"));
  const auto women = analyze(g, Part::A0);
  EXPECT_EQ(women.argmax.size(), 3u);
  EXPECT_EQ(women.rows[0].closeness.to_decimal(5), "0.01667");
  EXPECT_EQ(women.rows[0].centralization.to_decimal(5), "0.07779");
  const auto events = analyze(g, Part::A1);
  EXPECT_EQ(events.rows[0].label, "September 16th");
  EXPECT_EQ(events.rows[0].closeness.to_decimal(5), "0.01923");
  EXPECT_EQ(events.rows[0].centralization.to_decimal(5), "0.15984");
}

TEST(AnalyzeTest, Disconnected) {
  const auto g = to_bipartite(parse_two_mode("a x\nb y\n"));
  EXPECT_ERROR_KIND(analyze(g, Part::A0), ErrorKind::DisconnectedGraph);
}

TEST(RenderTest, CsvAndTable) {
  const auto a = analyze(to_bipartite(read_two_mode(kData / "fig1.tsv")), Part::A0);
  const auto csv = render(a, Format::Csv, 4);
  EXPECT_EQ(csv,
            "label,part,W,C,C1\n"
            "S0,left,10,0.1000,0.1222\n"
            "S1,left,12,0.0833,0.0056\n"
            "S2,left,12,0.0833,0.0056\n");
  const auto table = render(a, Format::Table, 4);
  EXPECT_EQ(table.back(), '\n');
  EXPECT_NE(table.find("argmax: S0"), std::string::npos);
  EXPECT_EQ(render(a, Format::Table, 4), table);
}

TEST(RenderTest, JsonRoundTrip) {
  const auto g = to_bipartite(read_two_mode(kData / "davis.tsv"));
  const auto a = analyze(g, Part::A0);
  const auto doc = nlohmann::json::parse(render(a, Format::Json, 12));
  ASSERT_EQ(doc["nodes"].size(), 18u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& node = doc["nodes"][i];
    EXPECT_EQ(node["label"], a.rows[i].label);
    EXPECT_EQ(node["part"], "left");
    EXPECT_EQ(node["W"], a.rows[i].total_distance);
    const Rational c1 = Rational::from_strings(node["C1"]["num"].get<std::string>(),
                                               node["C1"]["den"].get<std::string>());
    EXPECT_EQ(c1, a.rows[i].centralization);
    EXPECT_NEAR(std::stod(node["C1_dec"].get<std::string>()), c1.to_double(), 1e-12);
  }
  EXPECT_EQ(doc["argmax"].size(), 3u);
}

TEST(EmitTest, ExtremalEdgeList) {
  const auto b = extremal_edge_list(18, 14);
  EXPECT_EQ(b.rows.size(), 31u);
  std::size_t root_degree = 0;
  for (const auto& [l, r] : b.rows) root_degree += l == "0";
  EXPECT_EQ(root_degree, 14u);
  EXPECT_EQ(extremal_edge_list(14, 18).rows.size(), 31u);
  const auto single = extremal_edge_list(1, 1);
  ASSERT_EQ(single.rows.size(), 1u);
  EXPECT_EQ(single.rows[0], std::make_pair(std::string("0"), std::string("1")));
  EXPECT_ERROR_KIND(extremal_edge_list(0, 1), ErrorKind::InvalidSize);
}

// emit, parse, analyze reproduces the closed form at the root exactly.
TEST(EmitProperty, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path();
  for (std::size_t n0 = 1; n0 <= 12; ++n0) {
    for (std::size_t n1 = 1; n1 <= 12; ++n1) {
      const auto path = dir / ("twomode_emit_" + std::to_string(n0) + "_" +
                               std::to_string(n1) + ".tsv");
      emit_extremal(n0, n1, path);
      const auto g = to_bipartite(read_two_mode(path));
      std::filesystem::remove(path);
      if (g.size() == 1) continue;
      const auto a = analyze(g, Part::A0);
      const auto root = std::find_if(a.rows.begin(), a.rows.end(),
                                     [](const AnalysisRow& r) { return r.label == "0"; });
      ASSERT_NE(root, a.rows.end());
      EXPECT_EQ(root->centralization, closed_form_centralization(n0, n1));
    }
  }
}

}  // namespace
}  // namespace twomode
