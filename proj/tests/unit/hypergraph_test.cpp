#include <gtest/gtest.h>

#include <random>

#include "mhg/hypergraph.hpp"

namespace mhg {
namespace {

TEST(MixedHypergraph, SortsEdgesAndLists) {
  MixedHypergraph h(5, {{4, 2, 0}, {1, 0}}, {{3, 1}});
  EXPECT_EQ(h.c_edges(), (std::vector<Edge>{{0, 1}, {0, 2, 4}}));
  EXPECT_EQ(h.d_edges(), (std::vector<Edge>{{1, 3}}));
  EXPECT_FALSE(h.is_bi_hypergraph());
  EXPECT_EQ(h.uniformity(), 0u);
}

TEST(MixedHypergraph, BiAndUniform) {
  auto h = MixedHypergraph::bi(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_TRUE(h.is_bi_hypergraph());
  EXPECT_EQ(h.uniformity(), 3u);
  EXPECT_EQ(MixedHypergraph::bi(2, {}).uniformity(), 0u);
}

TEST(MixedHypergraph, EqualityIgnoresInsertionOrder) {
  EXPECT_EQ(MixedHypergraph::bi(4, {{0, 1}, {2, 3}}), MixedHypergraph::bi(4, {{3, 2}, {1, 0}}));
}

TEST(MixedHypergraph, RejectsBadInput) {
  EXPECT_THROW(MixedHypergraph(0, {}, {}), InputError);
  EXPECT_THROW(MixedHypergraph(3, {{0, 3}}, {}), InputError);
  EXPECT_THROW(MixedHypergraph(3, {{1}}, {}), InputError);
  EXPECT_THROW(MixedHypergraph(3, {{1, 1}}, {}), InputError);
  EXPECT_THROW(MixedHypergraph(3, {}, {{0, 1}, {1, 0}}), InputError);
}

TEST(LabeledHypergraph, ValidatesLabels) {
  auto h = MixedHypergraph::bi(3, {{0, 1, 2}});
  EXPECT_NO_THROW(LabeledHypergraph(h, {}, 3));
  EXPECT_NO_THROW(LabeledHypergraph(h, {{{1, 1}}, {{1, 2}}, {{2, 1}}}, 3));
  EXPECT_THROW(LabeledHypergraph(h, {{{1, 1}}, {{1, 2}}}, 3), InputError);
  EXPECT_THROW(LabeledHypergraph(h, {{{1, 1}}, {{1, 2}}, {{1, 1}}}, 3), InputError);
  EXPECT_THROW(LabeledHypergraph(h, {{{1, 1}}, {{1, 2}}, {{2}}}, 3), InputError);
  EXPECT_THROW(LabeledHypergraph(h, {{{1, 1}}, {{1, 0}}, {{2, 1}}}, 3), InputError);
  EXPECT_THROW(LabeledHypergraph(h, {}, 4), InputError);
}

TEST(LabeledHypergraph, FindAndEquality) {
  auto h = MixedHypergraph::bi(3, {{0, 1, 2}});
  LabeledHypergraph a(h, {{{1, 1}}, {{1, 2}}, {{2, 1}}}, 3, Provenance{"H9", {4, 3}, 4});
  LabeledHypergraph b(h, {{{1, 1}}, {{1, 2}}, {{2, 1}}}, 3);
  EXPECT_EQ(a.find(VertexLabel{{2, 1}}), Vertex{2});
  EXPECT_FALSE(a.find(VertexLabel{{3, 3}}).has_value());
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_string(a.labels()[1]), "1,2");
}

TEST(Partition, RestrictedGrowth) {
  Partition p({0, 1, 0, 2, 1});
  EXPECT_EQ(p.class_count(), 3u);
  EXPECT_EQ(p.classes(), (std::vector<std::vector<Vertex>>{{0, 2}, {1, 4}, {3}}));
  EXPECT_EQ(to_string(p), "0,1,0,2,1");
  EXPECT_THROW(Partition({1, 0}), InputError);
  EXPECT_THROW(Partition({0, 2}), InputError);
  EXPECT_THROW(Partition(std::vector<ClassIndex>{}), InputError);
}

TEST(CanonicalForm, RelabelsByFirstAppearance) {
  EXPECT_EQ(canonical_form(std::vector<int>{7, 7, 3, 9, 3}), Partition({0, 0, 1, 2, 1}));
  EXPECT_EQ(canonical_form(std::vector<std::string>{"b", "a", "b"}), Partition({0, 1, 0}));
}

TEST(CanonicalForm, IdempotentOnRandomTokens) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> tok(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> t(1 + trial % 12);
    for (auto& x : t) x = tok(rng);
    const auto p = canonical_form(t);
    EXPECT_EQ(canonical_form(p.assignment()), p);
    // Any relabeling of the tokens gives the same partition.
    std::vector<int> shifted(t);
    for (auto& x : shifted) x = 100 - 3 * x;
    EXPECT_EQ(canonical_form(shifted), p);
  }
}

TEST(EdgeColorStatus, ThreeWays) {
  Partition p({0, 0, 1, 2});
  EXPECT_EQ(edge_color_status(p, Edge{0, 1}), EdgeColorStatus::monochromatic);
  EXPECT_EQ(edge_color_status(p, Edge{1, 2, 3}), EdgeColorStatus::polychromatic);
  EXPECT_EQ(edge_color_status(p, Edge{0, 1, 2}), EdgeColorStatus::mixed);
  EXPECT_THROW(edge_color_status(p, Edge{0, 4}), InputError);
  EXPECT_THROW(edge_color_status(p, Edge{0}), InputError);
}

TEST(StrictColoring, SingleBiEdge) {
  auto h = MixedHypergraph::bi(4, {{0, 1, 2, 3}});
  EXPECT_FALSE(is_strict_coloring(h, Partition({0, 0, 0, 0})));
  EXPECT_FALSE(is_strict_coloring(h, Partition({0, 1, 2, 3})));
  EXPECT_TRUE(is_strict_coloring(h, Partition({0, 0, 1, 2})));
  EXPECT_THROW(is_strict_coloring(h, Partition({0, 1})), InputError);
}

TEST(StrictColoring, AssignmentAcceptsAnyLabels) {
  MixedHypergraph h(3, {{0, 1}}, {{1, 2}});
  const std::vector<ClassIndex> ok{5, 5, 2};
  const std::vector<ClassIndex> bad{5, 2, 2};
  EXPECT_TRUE(is_strict_assignment(h, ok));
  EXPECT_FALSE(is_strict_assignment(h, bad));
}

TEST(Induced, KeepsContainedEdgesOnly) {
  MixedHypergraph h(5, {{0, 1, 2}, {2, 3}}, {{1, 4}, {2, 3}});
  const std::vector<Vertex> keep{4, 1, 2, 3};
  auto sub = induced_subhypergraph(h, keep);
  EXPECT_EQ(sub.vertex_count(), 4u);
  // 1 -> 0, 2 -> 1, 3 -> 2, 4 -> 3
  EXPECT_EQ(sub.c_edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(sub.d_edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
  EXPECT_THROW(induced_subhypergraph(h, std::vector<Vertex>{}), InputError);
  EXPECT_THROW(induced_subhypergraph(h, std::vector<Vertex>{0, 5}), InputError);
}

TEST(Induced, LabeledKeepsLabelsAndDropsProvenance) {
  auto h = MixedHypergraph::bi(3, {{0, 1}, {1, 2}});
  LabeledHypergraph g(h, {{{1}}, {{2}}, {{3}}}, 2, Provenance{"x", {}, 2});
  const std::vector<Vertex> keep{1, 2};
  auto sub = induced_subhypergraph(g, keep);
  EXPECT_EQ(sub.labels(), (std::vector<VertexLabel>{{{2}}, {{3}}}));
  EXPECT_EQ(sub.uniformity(), 2u);
  EXPECT_FALSE(sub.provenance().has_value());
}

}  // namespace
}  // namespace mhg
