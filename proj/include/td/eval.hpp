#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "td/diagram.hpp"
#include "td/tensor.hpp"

namespace td {

enum class Evaluator { Contraction, Layered, Both };

Evaluator parse_evaluator(const std::string& s);
const char* to_string(Evaluator e);

struct EvalResult {
  Tensor tensor;
  std::size_t term_count = 0;  // nonzero contributions summed
  std::chrono::nanoseconds elapsed{0};
};

// Sum over index assignments: each edge contributes M_e[head, tail], each node
// the Levi-Civita symbol of its indices read in ciliation order.
Tensor eval_contraction(const Diagram& g, const Bindings& b);
Tensor eval_contraction(const LayeredDiagram& d, const Bindings& b);
EvalResult eval_contraction_detailed(const Diagram& g, const Bindings& b);

// Folds the slices bottom to top over a dense state.
Tensor eval_layered(const LayeredDiagram& d, const Bindings& b);
EvalResult eval_layered_detailed(const LayeredDiagram& d, const Bindings& b);

class CrossCheckMismatch : public std::runtime_error {
 public:
  explicit CrossCheckMismatch(TensorDifference diff);
  const TensorDifference& difference() const { return diff_; }

 private:
  TensorDifference diff_;
};

// Layered evaluation of d against contraction of g; throws CrossCheckMismatch
// on the first differing entry.
Tensor cross_check(const LayeredDiagram& d, const Diagram& g, const Bindings& b);
Tensor eval_checked(const LayeredDiagram& d, const Bindings& b);

EvalResult evaluate(const LayeredDiagram& d, const Bindings& b, Evaluator which);

// Rough count of multiply-adds the layered evaluator would perform.
double layered_cost(const LayeredDiagram& d);

struct Term {
  Rational coeff;
  LayeredDiagram diagram;
};
using FormalSum = std::vector<Term>;

EvalResult evaluate(const FormalSum& sum, const Bindings& b, Evaluator which);

}  // namespace td
