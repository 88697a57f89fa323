#include <gtest/gtest.h>

#include "gen.hpp"
#include "td/builders.hpp"
#include "td/diagram.hpp"

using namespace td;

namespace {

bool has_kind(const std::vector<Violation>& v, const std::string& kind) {
  for (const auto& x : v)
    if (x.kind == kind) return true;
  return false;
}

TEST(Validate, DefaultCupThenCapIsAPolarityViolation) {
  const LayeredDiagram d{2, {}, {Slice{{CupPiece{}}}, Slice{{CapPiece{}}}}};
  const auto v = validate_layered(d);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(has_kind(v, "polarity"));
  EXPECT_EQ(v.front().layer, 2);
}

TEST(Validate, WireCountMismatch) {
  const LayeredDiagram d{2, {}, {Slice{{CupPiece{}}}, Slice{{IdPiece{}}}}};
  const auto v = validate_layered(d);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, "wire count");
  EXPECT_NE(v[0].message.find("2 vs 1"), std::string::npos) << v[0].message;
}

TEST(Validate, VertexRules) {
  // A sink needs vector inputs.
  EXPECT_TRUE(has_kind(validate_layered(LayeredDiagram{2, {Polarity::Covector, Polarity::Covector},
                                                       {Slice{{VertexPiece{Direction::Sink, 2, {0, 1}}}}}}),
                       "sink/source"));
  EXPECT_TRUE(has_kind(
      validate_layered(LayeredDiagram{3, {Polarity::Vector}, {Slice{{VertexPiece{Direction::Sink, 1, {0, 0, 1}}}}}}),
      "ciliation"));
  EXPECT_TRUE(validate_layered(complemental_node(2, 3)).empty());
}

TEST(Validate, BuildersAreValid) {
  std::vector<LayeredDiagram> ds{loop_diagram(3),          trace_loop(2, "A"),          adjugate_diagram(4, "A"),
                                 codeterminant(3),         antisym_nodepair(2, 4),      binet_cauchy_pair().lhs,
                                 cross_product_node(4),    jacobi_diagrams(2, 3, "A").lhs,
                                 cup_crossed(3),           cap_with_matrix(3, "A", true, true)};
  for (const auto& t : triple_presentations()) ds.push_back(t);
  for (const auto& d : ds) {
    EXPECT_TRUE(validate_layered(d).empty());
    EXPECT_TRUE(validate_graph(to_graph(d)).empty());
  }
}

TEST(ToGraph, TraceLoopIsOneLabelledLoop) {
  const Diagram g = to_graph(trace_loop(2, "A"));
  EXPECT_TRUE(g.vertices.empty());
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_TRUE(g.edges[0].is_loop());
  ASSERT_EQ(g.edges[0].labels.size(), 1u);
  EXPECT_EQ(g.edges[0].labels[0].name, "A");
}

TEST(ToGraph, AdjugateShape) {
  const Diagram g = to_graph(adjugate_diagram(3, "A"));
  int nodes = 0;
  for (const auto& v : g.vertices)
    if (v.kind == VertexKind::Node) {
      ++nodes;
      EXPECT_EQ(v.ends.size(), 3u);
    }
  EXPECT_EQ(nodes, 2);
  EXPECT_EQ(g.edges.size(), 4u);
  EXPECT_EQ(g.input_count(), 1);
  EXPECT_EQ(g.output_count(), 1);
}

TEST(ToGraph, CovectorMatrixLabelFollowsOrientation) {
  // Mat(A, transpose) on a covector wire carries A along the downward orientation.
  const Diagram g = to_graph(LayeredDiagram{2, {Polarity::Covector}, {Slice{{MatPiece{"A", true}}}}});
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].labels[0], (EdgeLabel{"A", false}));
}

TEST(Compose, VerticalAndHorizontal) {
  const LayeredDiagram a{2, {Polarity::Vector}, {Slice{{MatPiece{"A"}}}}};
  const LayeredDiagram b{2, {Polarity::Vector}, {Slice{{MatPiece{"B"}}}, Slice{{MatPiece{"A"}}}}};
  const LayeredDiagram v = compose_vertical(a, b);
  EXPECT_EQ(v.layers.size(), 3u);
  const LayeredDiagram h = juxtapose_horizontal(a, b);
  EXPECT_EQ(h.input_count(), 2);
  EXPECT_EQ(h.layers.size(), 2u);
  EXPECT_TRUE(validate_layered(h).empty());
  EXPECT_THROW(compose_vertical(a, LayeredDiagram{2, {}, {Slice{{CupPiece{}}}}}), DiagramError);
}

TEST(ExpandPerms, OnlyCrossingsRemain) {
  gen::Gen g(51);
  for (int i = 0; i < 50; ++i) {
    const LayeredDiagram d = expand_perms(g.diagram(2));
    EXPECT_TRUE(validate_layered(d).empty());
    for (const auto& s : d.layers)
      for (const auto& p : s.pieces) EXPECT_FALSE(std::holds_alternative<PermPiece>(p));
  }
}

TEST(FuzzGenerator, ProducesValidDiagrams) {
  gen::Gen g(52);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(g.integer(1, 3));
    const LayeredDiagram d = g.diagram(n);
    const auto v = validate_layered(d);
    ASSERT_TRUE(v.empty()) << v.front().str();
    EXPECT_TRUE(validate_graph(to_graph(d)).empty());
  }
}

}  // namespace
