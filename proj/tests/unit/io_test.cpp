#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "corpus.hpp"
#include "mhg/constructions.hpp"
#include "mhg/io.hpp"

namespace mhg {
namespace {

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

std::size_t parse_error_line(std::string_view text) {
  try {
    read_mhg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(WriteMhg, SingleBiEdge) {
  LabeledHypergraph g(MixedHypergraph::bi(4, {{0, 1, 2, 3}}), {}, 4);
  EXPECT_EQ(write_mhg(g), "mhg 1\nuniform 4\nvertices 4\nbiedge 0 1 2 3\n");
}

TEST(WriteMhg, EmptyEdgeSet) {
  LabeledHypergraph g(MixedHypergraph(3, {}, {}), {}, 0);
  EXPECT_EQ(write_mhg(g), "mhg 1\nuniform 0\nvertices 3\n");
}

TEST(WriteMhg, MixedListsAndOrder) {
  LabeledHypergraph g(MixedHypergraph(4, {{2, 3}, {0, 1}}, {{0, 1}, {1, 3}}), {}, 2);
  EXPECT_EQ(write_mhg(g), "mhg 1\nuniform 2\nvertices 4\nbiedge 0 1\ndedge 1 3\ncedge 2 3\n");
}

TEST(WriteMhg, H9Lines) {
  const auto g = gen_small_case(ConstructionTag::H9, 4);
  const auto text = write_mhg(g);
  EXPECT_EQ(count_prefix(text, "label "), 11u);
  EXPECT_EQ(count_prefix(text, "biedge "), g.graph().c_edges().size());
  EXPECT_EQ(count_prefix(text, "cedge "), 0u);
  EXPECT_EQ(count_prefix(text, "dedge "), 0u);
}

TEST(ReadMhg, ToleratesCommentsAndOrder) {
  const auto g = read_mhg(
      "# a comment\n"
      "mhg 1\n"
      "uniform 3\n"
      "\n"
      "vertices 4\n"
      "biedge 3 2 1\n"
      "  # indented comment\n"
      "biedge 0 1 2\n");
  EXPECT_EQ(g.graph(), MixedHypergraph::bi(4, {{0, 1, 2}, {1, 2, 3}}));
  EXPECT_EQ(g.uniformity(), 3u);
  EXPECT_FALSE(g.has_labels());
}

TEST(ReadMhg, CedgePlusDedgeIsBiEdge) {
  const auto g = read_mhg("mhg 1\nuniform 4\nvertices 4\ncedge 0 1 2 3\ndedge 0 1 2 3\n");
  EXPECT_TRUE(g.graph().is_bi_hypergraph());
  EXPECT_EQ(write_mhg(g), "mhg 1\nuniform 4\nvertices 4\nbiedge 0 1 2 3\n");
}

TEST(ReadMhg, Labels) {
  const auto g = read_mhg("mhg 1\nuniform 2\nvertices 2\nlabel 1 2,1\nlabel 0 1,1\nbiedge 0 1\n");
  ASSERT_TRUE(g.has_labels());
  EXPECT_EQ(g.labels()[0], (VertexLabel{{1, 1}}));
  EXPECT_EQ(g.labels()[1], (VertexLabel{{2, 1}}));
}

TEST(ReadMhg, ErrorsNameTheLine) {
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 3\nbiedge 0 3\n"), 4u);
  EXPECT_EQ(parse_error_line("mhg 2\nuniform 2\nvertices 3\n"), 1u);
  EXPECT_EQ(parse_error_line("uniform 2\n"), 1u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 3\nbiedge 0 1\nbiedge 1 0\n"), 5u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 3\nbiedge 0 1\ncedge 0 1\n"), 5u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 3\nvertices 3\nbiedge 0 1\n"), 4u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 3\nhyperedge 0 1\n"), 4u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 3\nbiedge 0 x\n"), 4u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 3\nbiedge 1 1\n"), 4u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 2\nlabel 0 1,1\nlabel 1 1,1\n"), 5u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 2\nlabel 0 1,0\n"), 4u);
  EXPECT_EQ(parse_error_line("mhg 1\nuniform 2\nvertices 2\nlabel 0 1,1\n"), 4u);
  EXPECT_NE(parse_error_line("mhg 1\nuniform 2\n"), 0u);
  EXPECT_NE(parse_error_line(""), 0u);
}

TEST(ReadMhg, MissingFile) { EXPECT_THROW(read_mhg_file("/nonexistent/dir/x.mhg"), std::runtime_error); }

TEST(RoundTrip, GeneratedInstancesAreByteStable) {
  for (const auto& [s, n] : testing::r4_grid()) {
    const auto g = generate(validate_target(s, 4));
    const auto text = write_mhg(g);
    const auto back = read_mhg(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(write_mhg(back), text);
  }
}

TEST(RoundTrip, File) {
  const auto g = gen_small_case(ConstructionTag::H5, 4);
  const auto path = (std::filesystem::temp_directory_path() / "mhg_io_test_h5.mhg").string();
  write_mhg_file(g, path);
  EXPECT_EQ(read_mhg_file(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(write_mhg_file(g, "/nonexistent/dir/x.mhg"), std::runtime_error);
}

}  // namespace
}  // namespace mhg
