#pragma once

#include "td/eval.hpp"

namespace td {

// Adds coeff * (contraction of g) into out; returns the number of nonzero terms.
std::size_t contract_into(const Diagram& g, const Bindings& b, Tensor& out, const Rational& coeff);

}  // namespace td
