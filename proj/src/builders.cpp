#include "td/builders.hpp"

#include <numeric>

namespace td {

namespace {

VertexPiece sink(int in, int n) { return VertexPiece{Direction::Sink, in, left_ciliation(in, n)}; }
VertexPiece source(int in, int n) { return VertexPiece{Direction::Source, in, left_ciliation(in, n)}; }

Slice repeat(const Piece& p, int count) { return Slice{std::vector<Piece>(count, p)}; }

std::vector<Polarity> vectors(int k) { return std::vector<Polarity>(k, Polarity::Vector); }

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

LayeredDiagram loop_diagram(int n) {
  return LayeredDiagram{n, {}, {Slice{{CupPiece{true}}}, Slice{{CapPiece{}}}}};
}

LayeredDiagram trace_loop(int n, const std::string& name) {
  return LayeredDiagram{n, {}, {Slice{{CupPiece{true}}}, Slice{{MatPiece{name}, IdPiece{}}}, Slice{{CapPiece{}}}}};
}

FormalSum det_permsum(int n, const std::string& name) {
  FormalSum sum;
  for (const Permutation& s : all_permutations(n)) {
    LayeredDiagram d{n, vectors(n), {repeat(MatPiece{name}, n), Slice{{PermPiece{s}}}}};
    sum.push_back({Rational(s.sign()), std::move(d)});
  }
  return sum;
}

LayeredDiagram vertex_pair(int n, const std::vector<std::vector<std::string>>& labels) {
  require(static_cast<int>(labels.size()) == n, "vertex_pair needs one label list per strand");
  LayeredDiagram d{n, {}, {Slice{{source(0, n)}}}};
  std::size_t depth = 0;
  for (const auto& l : labels) depth = std::max(depth, l.size());
  for (std::size_t i = 0; i < depth; ++i) {
    Slice s;
    for (const auto& l : labels) {
      if (i < l.size())
        s.pieces.push_back(MatPiece{l[i]});
      else
        s.pieces.push_back(IdPiece{});
    }
    d.layers.push_back(std::move(s));
  }
  d.layers.push_back(Slice{{sink(n, n)}});
  return d;
}

LayeredDiagram vertex_pair_split(int n, const std::string& a_name, int a, const std::string& b_name, int b) {
  require(a >= 0 && b >= 0 && a + b <= n, "vertex_pair_split: strand counts exceed n");
  std::vector<std::vector<std::string>> labels(n);
  for (int i = 0; i < a; ++i)
    if (!a_name.empty()) labels[i] = {a_name};
  for (int i = a; i < a + b; ++i)
    if (!b_name.empty()) labels[i] = {b_name};
  return vertex_pair(n, labels);
}

FormalSum antisym_permsum(int k, int n) {
  FormalSum sum;
  if (k == 0) {
    sum.push_back({Rational(1), LayeredDiagram{n, {}, {}}});
    return sum;
  }
  for (const Permutation& s : all_permutations(k))
    sum.push_back({Rational(s.sign()), LayeredDiagram{n, vectors(k), {Slice{{PermPiece{s}}}}}});
  return sum;
}

LayeredDiagram antisym_nodepair(int k, int n) {
  require(k >= 0 && k <= n, "antisym_nodepair needs 0 <= k <= n");
  return LayeredDiagram{n, vectors(k), {Slice{{sink(k, n)}}, Slice{{source(n - k, n)}}}};
}

Rational antisym_nodepair_scale(int k, int n) { return Rational(reversal_sign(n)) / factorial(n - k); }

LayeredDiagram complemental_node(int k, int n) { return complemental_node(k, n, left_ciliation(k, n)); }

LayeredDiagram complemental_node(int k, int n, std::vector<int> ciliation) {
  require(k >= 0 && k <= n, "complemental_node needs 0 <= k <= n");
  return LayeredDiagram{n, vectors(k), {Slice{{VertexPiece{Direction::Sink, k, std::move(ciliation)}}}}};
}

LayeredDiagram codeterminant(int n) { return LayeredDiagram{n, {}, {Slice{{source(0, n)}}}}; }

LayeredDiagram adjugate_diagram(int n, const std::string& name) {
  require(n >= 1, "adjugate_diagram needs n >= 1");
  return LayeredDiagram{n,
                        vectors(1),
                        {Slice{{sink(1, n)}}, repeat(MatPiece{name, true}, n - 1), Slice{{source(n - 1, n)}}}};
}

Rational adjugate_scale(int n) { return Rational(reversal_sign(n)) / factorial(n - 1); }

LayeredDiagram adjugate_closed_form(int n, const std::string& name) {
  LayeredDiagram first{n, vectors(1), {Slice{{MatPiece{name}}}}};
  return compose_vertical(adjugate_diagram(n, name), first);
}

Matrix nullifier(int n, int j) {
  Matrix p = Matrix::Identity(n, n);
  p(j, j) = Rational(0);
  return p;
}

CramerSolution cramer_solve(const Matrix& a, const Vector& b, Evaluator which) {
  const int n = static_cast<int>(a.rows());
  require(a.cols() == n && b.size() == n, "cramer_solve: shape mismatch");
  CramerSolution sol;
  std::vector<std::vector<std::string>> all_a(n, std::vector<std::string>{"A"});
  Bindings bind{{"A", a}};
  Rational pair = evaluate(vertex_pair(n, all_a), bind, which).tensor.as_scalar();
  sol.det = pair / (Rational(reversal_sign(n)) * factorial(n));
  if (sol.det.is_zero()) {
    sol.singular = true;
    return sol;
  }
  const Rational c = Rational(reversal_sign(n)) * factorial(n - 1);
  const LayeredDiagram d = adjugate_closed_form(n, "A");
  sol.x.resize(n);
  for (int j = 0; j < n; ++j) {
    Bindings bj{{"A", replace_column(a, j, b)}};
    const Tensor t = evaluate(d, bj, which).tensor;
    const int idx = j + 1;
    sol.x(j) = t(std::span(&idx, 1), std::span(&idx, 1)) / c / sol.det;
  }
  return sol;
}

namespace {

LayeredDiagram traced_term(const Permutation& s, bool open, const std::string& name, int n) {
  const int m = s.size();
  const int t = open ? m - 1 : m;
  const int o = open ? 1 : 0;
  LayeredDiagram d{n, open ? vectors(1) : std::vector<Polarity>{}, {}};
  Slice cups, mats, caps;
  if (open) {
    cups.pieces.push_back(IdPiece{});
    mats.pieces.push_back(IdPiece{});
    caps.pieces.push_back(IdPiece{});
  }
  for (int i = 0; i < t; ++i) {
    cups.pieces.push_back(CupPiece{true});
    mats.pieces.push_back(MatPiece{name});
    mats.pieces.push_back(IdPiece{});
    caps.pieces.push_back(CapPiece{});
  }
  // Strand a sits at wire slot(a); it moves to the slot of strand s(a).
  auto slot = [&](int a) { return open ? (a == 0 ? 0 : 1 + 2 * (a - 1)) : 2 * a; };
  const int width = o + 2 * t;
  std::vector<int> images(width);
  std::iota(images.begin(), images.end(), 1);
  for (int a = 0; a < m; ++a) images[slot(a)] = slot(s(a + 1) - 1) + 1;
  d.layers = {cups, mats, Slice{{PermPiece{Permutation(images)}}}, caps};
  if (t == 0) d.layers = {Slice{{PermPiece{Permutation(images)}}}};
  if (width == 0) d.layers.clear();
  return d;
}

int cycle_length_of_one(const Permutation& s) {
  int len = 1;
  for (int j = s(1); j != 1; j = s(j)) ++len;
  return len;
}

}  // namespace

FormalSum antisym_traced(int m, bool open, const std::string& name, int n) {
  require(m >= (open ? 1 : 0), "antisym_traced: too few strands");
  FormalSum sum;
  if (m == 0) {
    sum.push_back({Rational(1), LayeredDiagram{n, {}, {}}});
    return sum;
  }
  for (const Permutation& s : all_permutations(m))
    sum.push_back({Rational(s.sign()), traced_term(s, open, name, n)});
  return sum;
}

FormalSum antisym_traced_by_cycle(int m, const std::string& name, int n, int cycle_length) {
  FormalSum sum;
  for (const Permutation& s : all_permutations(m))
    if (cycle_length_of_one(s) == cycle_length) sum.push_back({Rational(s.sign()), traced_term(s, true, name, n)});
  return sum;
}

LayeredDiagram matrix_power_strand(int n, const std::string& name, int power) {
  LayeredDiagram d{n, vectors(1), {}};
  for (int i = 0; i < power; ++i) d.layers.push_back(Slice{{MatPiece{name}}});
  return d;
}

LayeredDiagram cross_product_node(int n) { return complemental_node(n - 1, n); }

Vector cross_product(const std::vector<Vector>& vs, Evaluator which) {
  const int n = static_cast<int>(vs.size()) + 1;
  for (const auto& v : vs) require(v.size() == n, "cross_product: expected vectors of length n");
  Tensor t = evaluate(cross_product_node(n), {}, which).tensor;
  return apply_inputs(t, vs).as_vector();
}

BinetCauchyPair binet_cauchy_pair() {
  const int n = 3;
  const std::vector<Polarity> in{Polarity::Vector, Polarity::Vector, Polarity::Covector, Polarity::Covector};
  BinetCauchyPair p;
  p.lhs = LayeredDiagram{n, in, {Slice{{sink(2, n), source(2, n)}}, Slice{{CapPiece{true}}}}};
  auto pairing = [&](std::vector<int> images) {
    return LayeredDiagram{n, in, {Slice{{PermPiece{Permutation(std::move(images))}}}, Slice{{CapPiece{}, CapPiece{}}}}};
  };
  p.rhs = {{Rational(1), pairing({1, 3, 2, 4})}, {Rational(-1), pairing({1, 3, 4, 2})}};
  return p;
}

LayeredDiagram kink(int n, bool mirrored, Polarity strand) {
  if (strand == Polarity::Vector) {
    if (!mirrored) return LayeredDiagram{n, vectors(1), {Slice{{IdPiece{}, CupPiece{}}}, Slice{{CapPiece{}, IdPiece{}}}}};
    return LayeredDiagram{n, vectors(1), {Slice{{CupPiece{true}, IdPiece{}}}, Slice{{IdPiece{}, CapPiece{true}}}}};
  }
  const std::vector<Polarity> cov{Polarity::Covector};
  if (!mirrored) return LayeredDiagram{n, cov, {Slice{{IdPiece{}, CupPiece{true}}}, Slice{{CapPiece{true}, IdPiece{}}}}};
  return LayeredDiagram{n, cov, {Slice{{CupPiece{}, IdPiece{}}}, Slice{{IdPiece{}, CapPiece{}}}}};
}

LayeredDiagram cup_crossed(int n) { return LayeredDiagram{n, {}, {Slice{{CupPiece{true}}}, Slice{{CrossPiece{}}}}}; }

std::vector<LayeredDiagram> triple_presentations() {
  const int n = 3;
  auto v = [](int in, std::vector<int> c) { return VertexPiece{Direction::Sink, in, std::move(c)}; };
  return {
      LayeredDiagram{n, vectors(3), {Slice{{v(3, {0, 1, 2})}}}},
      LayeredDiagram{n, vectors(3), {Slice{{v(2, {0, 1, 2}), IdPiece{}}}, Slice{{CapPiece{true}}}}},
      LayeredDiagram{n, vectors(3), {Slice{{IdPiece{}, v(2, {2, 0, 1})}}, Slice{{CapPiece{}}}}},
      LayeredDiagram{n,
                     vectors(3),
                     {Slice{{IdPiece{}, CrossPiece{}}}, Slice{{v(2, {0, 2, 1}), IdPiece{}}}, Slice{{CapPiece{true}}}}},
  };
}

LayeredDiagram cap_with_matrix(int n, const std::string& name, bool on_right, bool transpose) {
  Slice m = on_right ? Slice{{IdPiece{}, MatPiece{name, transpose}}} : Slice{{MatPiece{name, transpose}, IdPiece{}}};
  return LayeredDiagram{n, {Polarity::Vector, Polarity::Covector}, {m, Slice{{CapPiece{}}}}};
}

JacobiPair jacobi_diagrams(int k, int n, const std::string& name) {
  require(k >= 0 && k <= n, "jacobi_diagrams needs 0 <= k <= n");
  JacobiPair p;
  p.lhs = LayeredDiagram{n, vectors(n - k), {Slice{{sink(n - k, n)}}}};
  // One column at a time: source, n-1 matrix strands, sink.
  for (int c = 0; c < k; ++c) {
    auto around = [&](std::vector<Piece> mid) {
      Slice s = id_slice(c);
      s.pieces.insert(s.pieces.end(), mid.begin(), mid.end());
      for (int i = c + 1; i < k; ++i) s.pieces.push_back(IdPiece{});
      return s;
    };
    p.lhs.layers.push_back(around({source(1, n)}));
    p.lhs.layers.push_back(around(std::vector<Piece>(n - 1, MatPiece{name})));
    p.lhs.layers.push_back(around({sink(n - 1, n)}));
  }
  p.lhs.layers.push_back(Slice{{source(k, n)}});
  p.rhs = LayeredDiagram{n,
                         vectors(n - k),
                         {Slice{{sink(n - k, n)}}, repeat(MatPiece{name, true}, k), Slice{{source(k, n)}}}};
  return p;
}

Rational jacobi_scale(int k, int n) {
  Rational c = Rational(reversal_sign(n)) * factorial(n - 1);
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= c;
  return r;
}

LayeredDiagram jacobi_through_form(int k, int n, const std::string& name) {
  LayeredDiagram first{n, vectors(n - k), {repeat(MatPiece{name}, n - k)}};
  if (n == k) first.layers.clear();
  return compose_vertical(antisym_nodepair(n - k, n), first);
}

}  // namespace td
