#include "eval_internal.hpp"

namespace td {

Evaluator parse_evaluator(const std::string& s) {
  if (s == "contraction") return Evaluator::Contraction;
  if (s == "layered") return Evaluator::Layered;
  if (s == "both") return Evaluator::Both;
  throw std::invalid_argument("unknown evaluator '" + s + "' (expected contraction, layered or both)");
}

const char* to_string(Evaluator e) {
  switch (e) {
    case Evaluator::Contraction: return "contraction";
    case Evaluator::Layered: return "layered";
    case Evaluator::Both: return "both";
  }
  return "";
}

CrossCheckMismatch::CrossCheckMismatch(TensorDifference diff)
    : std::runtime_error("evaluators disagree at " + diff.str() + " (layered vs contraction)"),
      diff_(std::move(diff)) {}

Tensor cross_check(const LayeredDiagram& d, const Diagram& g, const Bindings& b) {
  Tensor lay = eval_layered(d, b);
  Tensor con = eval_contraction(g, b);
  if (lay.out_arity() != con.out_arity() || lay.in_arity() != con.in_arity())
    throw CrossCheckMismatch(TensorDifference{{}, {}, Rational(lay.rank()), Rational(con.rank())});
  if (auto diff = first_difference(lay, con)) throw CrossCheckMismatch(std::move(*diff));
  return lay;
}

Tensor eval_checked(const LayeredDiagram& d, const Bindings& b) { return cross_check(d, to_graph(d), b); }

EvalResult evaluate(const LayeredDiagram& d, const Bindings& b, Evaluator which) {
  switch (which) {
    case Evaluator::Contraction: return eval_contraction_detailed(to_graph(d), b);
    case Evaluator::Layered: return eval_layered_detailed(d, b);
    case Evaluator::Both: {
      const auto t0 = std::chrono::steady_clock::now();
      EvalResult lay = eval_layered_detailed(d, b);
      EvalResult con = eval_contraction_detailed(to_graph(d), b);
      if (auto diff = first_difference(lay.tensor, con.tensor)) throw CrossCheckMismatch(std::move(*diff));
      con.elapsed = std::chrono::steady_clock::now() - t0;
      return con;
    }
  }
  throw std::logic_error("unreachable");
}

EvalResult evaluate(const FormalSum& sum, const Bindings& b, Evaluator which) {
  if (sum.empty()) throw std::invalid_argument("empty formal sum");
  const auto t0 = std::chrono::steady_clock::now();
  const LayeredDiagram& first = sum.front().diagram;
  const auto outs = first.outputs();
  EvalResult r;
  r.tensor = Tensor(first.n, static_cast<int>(outs.size()), first.input_count());
  Tensor lay_total = r.tensor;
  for (const Term& t : sum) {
    if (t.diagram.n != first.n || t.diagram.inputs != first.inputs || t.diagram.outputs() != outs)
      throw DiagramError({{"boundary", "terms of a formal sum must share their boundary", 0}});
    if (t.coeff.is_zero()) continue;
    if (which != Evaluator::Layered) r.term_count += contract_into(to_graph(t.diagram), b, r.tensor, t.coeff);
    if (which != Evaluator::Contraction) {
      EvalResult lay = eval_layered_detailed(t.diagram, b);
      lay_total.add_scaled(lay.tensor, t.coeff);
      if (which == Evaluator::Layered) r.term_count += lay.term_count;
    }
  }
  if (which == Evaluator::Layered) r.tensor = std::move(lay_total);
  if (which == Evaluator::Both)
    if (auto diff = first_difference(lay_total, r.tensor)) throw CrossCheckMismatch(std::move(*diff));
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

}  // namespace td
