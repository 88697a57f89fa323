#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "td/builders.hpp"

namespace td {

struct BuiltinParams {
  int n = 2;
  int k = 0;
  int j = 1;
};

// A named builder. scale is the documented factor applied to the raw
// evaluation (e.g. the adjugate figure times scale is adj(A)).
struct Builtin {
  std::string name;
  std::string summary;
  bool needs_matrix = false;
  std::function<FormalSum(const BuiltinParams&)> build;
  std::function<Rational(const BuiltinParams&)> scale;
};

const std::vector<Builtin>& builtin_catalog();
// Throws std::invalid_argument("unknown builtin ...").
const Builtin& find_builtin(std::string_view name);

}  // namespace td
