#include <gtest/gtest.h>

#include "gen.hpp"
#include "td/builders.hpp"
#include "td/catalog.hpp"
#include "td/io.hpp"

using namespace td;

namespace {

const char* kTrace = R"({
  "n": 2,
  "matrices": {"A": [["2", "3"], ["4", 5]]},
  "layers": [
    {"pieces": [{"kind": "cup", "reversed": true}]},
    {"pieces": [{"kind": "mat", "name": "A"}, {"kind": "id"}]},
    {"pieces": [{"kind": "cap"}]}
  ]
})";

TEST(DiagramFile, TraceLoop) {
  const DiagramFile f = parse_diagram_file(kTrace);
  EXPECT_EQ(f.diagram.n, 2);
  EXPECT_EQ(eval_checked(f.diagram, f.matrices).as_scalar(), Rational(7));
}

TEST(DiagramFile, SyntaxErrorHasPosition) {
  try {
    parse_diagram_file("{\n  \"n\": 2,\n  \"layers\": [ oops ]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 15);
  }
}

TEST(DiagramFile, UnknownPieceKind) {
  try {
    parse_diagram_file(R"({"n": 2, "layers": [{"pieces": [{"kind": "twist"}]}]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), "layers[0].pieces[0].kind");
    EXPECT_NE(std::string(e.what()).find("unknown piece kind 'twist'"), std::string::npos);
  }
}

TEST(DiagramFile, SchemaErrors) {
  EXPECT_THROW(parse_diagram_file(R"({"layers": []})"), ParseError);
  EXPECT_THROW(parse_diagram_file(R"({"n": 2, "layers": [], "extra": 1})"), ParseError);
  EXPECT_THROW(parse_diagram_file(R"({"n": 2, "matrices": {"A": [[0.5]]}, "layers": []})"), ParseError);
  EXPECT_THROW(parse_diagram_file(R"({"n": 2, "inputs": ["up"], "layers": []})"), ParseError);
  EXPECT_THROW(parse_diagram_file(R"({"n": 2, "layers": [{"pieces": [{"kind": "perm", "images": [1, 1]}]}]})"),
               ParseError);
}

TEST(DiagramFile, WidthMismatchNamesTheLayer) {
  try {
    parse_diagram_file(R"({"n": 2, "layers": [{"pieces": [{"kind": "cup"}]}, {"pieces": [{"kind": "id"}]}]})");
    FAIL();
  } catch (const DiagramError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0].layer, 2);
    EXPECT_EQ(e.violations()[0].kind, "wire count");
  }
}

TEST(DiagramFile, RoundTripBuilders) {
  gen::Gen g(81);
  for (const auto& b : builtin_catalog()) {
    for (int n = 2; n <= 3; ++n) {
      BuiltinParams p{n, 1, 1};
      if (b.name == "binet-cauchy") p.n = 3;
      for (const Term& t : b.build(p)) {
        Bindings m;
        if (b.needs_matrix) m["A"] = g.matrix(t.diagram.n, t.diagram.n);
        const DiagramFile f = parse_diagram_file(print_diagram_file(t.diagram, m));
        EXPECT_EQ(f.matrices, m);
        EXPECT_EQ(eval_checked(f.diagram, m), eval_checked(t.diagram, m)) << b.name;
        EXPECT_EQ(print_diagram_file(f.diagram, f.matrices), print_diagram_file(t.diagram, m));
      }
    }
  }
}

TEST(DiagramFile, RoundTripFuzzed) {
  gen::Gen g(82);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(g.integer(1, 3));
    const LayeredDiagram d = g.diagram(n);
    const Bindings m{{"A", g.matrix(n, n)}, {"B", g.matrix(n, n)}};
    const DiagramFile f = parse_diagram_file(print_diagram_file(d, m));
    EXPECT_EQ(eval_layered(f.diagram, f.matrices), eval_layered(d, m));
  }
}

TEST(MatrixFile, Parse) {
  EXPECT_EQ(parse_matrix_text(R"([["1/2", 3], ["-4", "5"]])")(0, 0), Rational(1, 2));
  EXPECT_THROW(parse_matrix_text("[[1, 2], [3]]"), ParseError);
  EXPECT_THROW(parse_matrix_text("[[1, 2"), ParseError);
}

TEST(Dot, TraceLoopHasNoNodes) {
  const std::string dot = to_dot(to_graph(trace_loop(2, "A")));
  EXPECT_NE(dot.find("loop1 -> loop1 [label=\"A\"]"), std::string::npos) << dot;
  EXPECT_EQ(dot.find("circle"), std::string::npos);
}

TEST(Dot, AdjugateShowsCiliationPorts) {
  const std::string dot = to_dot(to_graph(adjugate_diagram(3, "A")));
  std::size_t circles = 0;
  for (std::size_t p = dot.find("shape=circle"); p != std::string::npos; p = dot.find("shape=circle", p + 1)) ++circles;
  EXPECT_EQ(circles, 2u);
  EXPECT_NE(dot.find("headlabel=\"3\""), std::string::npos);
  EXPECT_NE(dot.find("taillabel=\"1\""), std::string::npos);
}

TEST(Report, TextAndJson) {
  IdentityReport r;
  r.id = "trace_loop";
  r.n = 3;
  r.trials = 10;
  r.seed = 42;
  EXPECT_EQ(report_text(r, false), "PASS trace_loop n=3 trials=10 seed=42\n");
  EXPECT_EQ(report_json(r, false), R"({"id":"trace_loop","n":3,"trials":10,"seed":42,"outcome":"pass"})");
  EXPECT_NE(report_json(r, true).find("elapsed_ms"), std::string::npos);
}

}  // namespace
