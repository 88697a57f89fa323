#include "td/catalog.hpp"

namespace td {

namespace {

FormalSum single(LayeredDiagram d) { return {{Rational(1), std::move(d)}}; }

Rational one(const BuiltinParams&) { return Rational(1); }

Rational sign(int n) { return Rational(reversal_sign(n)); }

std::vector<Builtin> make_catalog() {
  return {
      {"loop", "closed loop; evaluates to n", false, [](const BuiltinParams& p) { return single(loop_diagram(p.n)); },
       one},
      {"trace", "loop through A; evaluates to tr(A)", true,
       [](const BuiltinParams& p) { return single(trace_loop(p.n, "A")); }, one},
      {"det", "closed node pair with A on every strand, scaled to det(A)", true,
       [](const BuiltinParams& p) {
         return single(vertex_pair(p.n, std::vector<std::vector<std::string>>(p.n, {"A"})));
       },
       [](const BuiltinParams& p) { return sign(p.n) / factorial(p.n); }},
      {"det-permsum", "signed sum of permuted A strands (entry 1..n;1..n is det(A))", true,
       [](const BuiltinParams& p) { return det_permsum(p.n, "A"); }, one},
      {"antisym", "node pair on k strands, scaled to the antisymmetrizer", false,
       [](const BuiltinParams& p) { return single(antisym_nodepair(p.k, p.n)); },
       [](const BuiltinParams& p) { return antisym_nodepair_scale(p.k, p.n); }},
      {"antisym-permsum", "antisymmetrizer on k strands as a permutation sum", false,
       [](const BuiltinParams& p) { return antisym_permsum(p.k, p.n); }, one},
      {"complemental", "vertex with k vector inputs and n-k covector outputs", false,
       [](const BuiltinParams& p) { return single(complemental_node(p.k, p.n)); }, one},
      {"codeterminant", "source vertex with n outputs", false,
       [](const BuiltinParams& p) { return single(codeterminant(p.n)); }, one},
      {"adjugate", "adjugate figure, scaled to adj(A)", true,
       [](const BuiltinParams& p) { return single(adjugate_diagram(p.n, "A")); },
       [](const BuiltinParams& p) { return adjugate_scale(p.n); }},
      {"adjugate-closed", "adjugate figure after A, scaled to det(A) I", true,
       [](const BuiltinParams& p) { return single(adjugate_closed_form(p.n, "A")); },
       [](const BuiltinParams& p) { return adjugate_scale(p.n); }},
      {"cayley-hamilton", "open traced antisymmetrizer on n+1 strands; the zero matrix", true,
       [](const BuiltinParams& p) { return antisym_traced(p.n + 1, true, "A", p.n); }, one},
      {"char-coefficient", "node pair with A on n-k strands, scaled to the coefficient of x^k in det(A - xI)", true,
       [](const BuiltinParams& p) { return single(vertex_pair_split(p.n, "A", p.n - p.k, "", p.k)); },
       [](const BuiltinParams& p) {
         return Rational(p.k % 2 ? -reversal_sign(p.n) : reversal_sign(p.n)) / (factorial(p.k) * factorial(p.n - p.k));
       }},
      {"cross-product", "vertex with n-1 inputs", false,
       [](const BuiltinParams& p) { return single(cross_product_node(p.n)); }, one},
      {"binet-cauchy", "paired vertices on u, v, w, x at n=3", false,
       [](const BuiltinParams&) { return single(binet_cauchy_pair().lhs); }, one},
      {"kink", "strand with a kink; the identity", false,
       [](const BuiltinParams& p) { return single(kink(p.n, false, Polarity::Vector)); }, one},
      {"jacobi", "k adjugate columns between a sink and a source", true,
       [](const BuiltinParams& p) { return single(jacobi_diagrams(p.k, p.n, "A").lhs); }, one},
  };
}

}  // namespace

const std::vector<Builtin>& builtin_catalog() {
  static const std::vector<Builtin> cat = make_catalog();
  return cat;
}

const Builtin& find_builtin(std::string_view name) {
  for (const auto& b : builtin_catalog())
    if (b.name == name) return b;
  throw std::invalid_argument("unknown builtin '" + std::string(name) + "'");
}

}  // namespace td
