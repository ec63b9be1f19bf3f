#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "picardlab/errors.hpp"
#include "picardlab/figure.hpp"

using namespace picardlab;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST(Figure, OneMarkerPerPair) {
  const std::vector<SetId> sets{SetId::A2, SetId::A3};
  const std::string svg = emit_svg(sets, 200);
  EXPECT_EQ(occurrences(svg, "class=\"marker A2\""), enumerate_set(SetId::A2, 200).size());
  EXPECT_EQ(occurrences(svg, "class=\"marker A3\""), enumerate_set(SetId::A3, 200).size());
  EXPECT_EQ(occurrences(svg, "class=\"marker "), enumerate_sets(sets, 200).size());
  EXPECT_EQ(occurrences(svg, "class=\"panel\""), 2u);
}

TEST(Figure, MultiScaleWithReferenceLines) {
  const std::string svg = emit_svg({SetId::A1, SetId::A2, SetId::A3, SetId::B, SetId::T}, 10000);
  EXPECT_EQ(occurrences(svg, "class=\"panel\""), 3u);
  EXPECT_EQ(occurrences(svg, "class=\"noether\""), 3u);
  EXPECT_EQ(occurrences(svg, "class=\"severi\""), 3u);
  EXPECT_EQ(occurrences(svg, "class=\"bmy\""), 3u);
  std::size_t total = 0;
  for (SetId id : kAllSets) total += enumerate_set(id, 10000).size();
  EXPECT_EQ(occurrences(svg, "class=\"marker "), total);
  EXPECT_EQ(svg, emit_svg({SetId::A1, SetId::A2, SetId::A3, SetId::B, SetId::T}, 10000));
}

TEST(Figure, EmptySetListDrawsLinesOnly) {
  const std::string svg = emit_svg({}, 200);
  EXPECT_EQ(occurrences(svg, "class=\"marker "), 0u);
  EXPECT_EQ(occurrences(svg, "class=\"severi\""), 2u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Figure, PanelBounds) {
  EXPECT_EQ(panel_bounds(10000), (std::vector<Integer>{100, 1000, 10000}));
  EXPECT_EQ(panel_bounds(200), (std::vector<Integer>{20, 200}));
}

TEST(Figure, GoldenFile) {
  std::ifstream in(std::string(PICARDLAB_GOLDEN_DIR) + "/a2_a3_chi200.svg", std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file";
  std::ostringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(emit_svg({SetId::A2, SetId::A3}, 200), golden.str());
}

TEST(Csv, RowsAndColumns) {
  const std::string csv = emit_csv({SetId::A1}, 31);
  EXPECT_EQ(occurrences(csv, "\n"), 6u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "set_label,params,K2,chi,slope_num,slope_den");
  EXPECT_NE(csv.find("A1,n=2,1,3,1,3\n"), std::string::npos);
  const std::string a2 = emit_csv({SetId::A2}, 11);
  EXPECT_NE(a2.find("A2,m=3;n=2,16,11,16,11\n"), std::string::npos);
}

TEST(Formats, Parsing) {
  EXPECT_EQ(parse_figure_format("svg"), FigureFormat::Svg);
  EXPECT_EQ(parse_figure_format("csv"), FigureFormat::Csv);
  EXPECT_THROW(parse_figure_format("png"), ParameterError);
}
