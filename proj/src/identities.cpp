#include "td/identities.hpp"

#include <algorithm>
#include <numeric>

namespace td {

namespace {

constexpr double kBothBudget = 4e5;

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Polarity> pols(int k, Polarity p = Polarity::Vector) { return std::vector<Polarity>(k, p); }

Slice row(int count, const Piece& p) { return Slice{std::vector<Piece>(count, p)}; }

// Stack the given slices bottom to top, dropping empty ones.
LayeredDiagram stack(int n, std::vector<Polarity> inputs, std::vector<Slice> slices) {
  LayeredDiagram d{n, std::move(inputs), {}};
  for (auto& s : slices)
    if (!s.pieces.empty()) d.layers.push_back(std::move(s));
  return d;
}

VertexPiece vertex(Direction dir, int in, int n) { return VertexPiece{dir, in, left_ciliation(in, n)}; }

Rational dot(const Vector& a, const Vector& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rational power(const Rational& r, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= r;
  return out;
}

Rational sign_of(int s) { return Rational(s); }

// Sign of a sequence by counting inversions; 0 unless it is a permutation of 1..len.
int inversion_sign(const std::vector<int>& seq) {
  const int m = static_cast<int>(seq.size());
  std::vector<bool> seen(m + 1, false);
  for (int v : seq) {
    if (v < 1 || v > m || seen[v]) return 0;
    seen[v] = true;
  }
  int inv = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

Matrix columns(const std::vector<Vector>& vs) {
  const int n = static_cast<int>(vs.front().size());
  Matrix m(n, static_cast<int>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(j) = vs[j];
  return m;
}

Vector cross3(const Vector& u, const Vector& v) {
  Vector w(3);
  w(0) = u(1) * v(2) - u(2) * v(1);
  w(1) = u(2) * v(0) - u(0) * v(2);
  w(2) = u(0) * v(1) - u(1) * v(0);
  return w;
}

Matrix inverse_oracle(const Matrix& a) {
  Matrix adj = adjugate_oracle(a);
  const Rational d = det_oracle(a);
  for (Eigen::Index i = 0; i < adj.rows(); ++i)
    for (Eigen::Index j = 0; j < adj.cols(); ++j) adj(i, j) = adj(i, j) / d;
  return adj;
}

Matrix submatrix(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(rows[i] - 1, cols[j] - 1);
  return m;
}

// Increasing k-subsets of 1..n.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  return out;
}

Rational closed_traced(CheckContext& c, int m, const Bindings& b) {
  return c.eval(antisym_traced(m, false, "A", c.n()), b).as_scalar();
}

// ---- checks ----

void check_trace_loop(CheckContext& c) {
  const Matrix a = c.matrix("A");
  c.expect_equal(c.eval(trace_loop(c.n(), "A"), {{"A", a}}).as_scalar(), trace(a), "loop through A vs tr(A)");
}

void check_loop_dim(CheckContext& c) {
  const int n = c.n();
  c.expect_equal(c.eval(loop_diagram(n), {}).as_scalar(), Rational(n), "closed loop");
  LayeredDiagram other{n, {}, {Slice{{CupPiece{}}}, Slice{{CapPiece{true}}}}};
  c.expect_equal(c.eval(other, {}).as_scalar(), Rational(n), "closed loop, opposite orientation");
}

void check_det_permsum(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Tensor t = c.eval(det_permsum(n, "A"), {{"A", a}});
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  c.expect_equal(t(idx, idx), det_oracle(a), "signed permutation sum entry (1..n; 1..n) vs det");
}

void check_kink(CheckContext& c) {
  const int n = c.n();
  const Tensor id = Tensor::identity(n, 1);
  for (Polarity p : {Polarity::Vector, Polarity::Covector})
    for (bool mirrored : {false, true}) {
      const LayeredDiagram k = kink(n, mirrored, p);
      const std::string what = std::string("kink on ") + to_string(p) + (mirrored ? " strand, mirrored" : " strand");
      c.expect_equal(c.eval(k, {}), id, what);
      const Diagram g = to_graph(k);
      c.expect(g.edges.size() == 1, what + ": graph is a single edge");
    }
  // A kink can slide past a matrix.
  const Matrix a = c.matrix("A");
  LayeredDiagram k = kink(n, false, Polarity::Vector);
  k.layers.insert(k.layers.begin(), Slice{{MatPiece{"A"}}});
  c.expect_equal(c.eval(k, {{"A", a}}), Tensor::from_matrix(a), "kink after A");
}

void check_cup_swap(CheckContext& c) {
  const int n = c.n();
  LayeredDiagram cup{n, {}, {Slice{{CupPiece{}}}}};
  c.expect_equal(c.eval(cup_crossed(n), {}), c.eval(cup, {}), "crossed reversed cup vs cup");
  const Matrix a = c.matrix("A");
  const Bindings b{{"A", a}};
  LayeredDiagram x{n, {}, {Slice{{CupPiece{true}}}, Slice{{MatPiece{"A"}, IdPiece{}}}, Slice{{CrossPiece{}}}}};
  LayeredDiagram y{n, {}, {Slice{{CupPiece{}}}, Slice{{IdPiece{}, MatPiece{"A"}}}}};
  c.expect_equal(c.eval(x, b), c.eval(y, b), "matrix carried through the crossing");
}

void check_triple_isotopy(CheckContext& c) {
  const auto ps = triple_presentations();
  const Tensor t0 = c.eval(ps[0], {});
  for (std::size_t i = 1; i < ps.size(); ++i)
    c.expect_equal(c.eval(ps[i], {}), t0, "presentation " + std::to_string(i + 1) + " vs presentation 1");
  const std::vector<Vector> uvw{c.vector("u"), c.vector("v"), c.vector("w")};
  c.expect_equal(apply_inputs(t0, uvw).as_scalar(), det_oracle(columns(uvw)), "value on (u, v, w) vs det[u v w]");
}

void check_cap_transpose(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Vector u = c.vector("u");
  const Vector w = c.vector("w");
  const Bindings b{{"A", a}, {"At", a.transpose()}};
  const std::vector<Vector> in{u, w};
  const Tensor left = c.eval(cap_with_matrix(n, "A", false, false), b);
  c.expect_equal(apply_inputs(left, in).as_scalar(), dot(a * u, w), "A on the vector leg gives (Au).w");
  c.expect_equal(c.eval(cap_with_matrix(n, "A", true, true), b), left, "A^T action on the covector leg");
  c.expect_equal(c.eval(cap_with_matrix(n, "At", true, false), b), left, "A^T bound on the covector leg");
  const Tensor naive = c.eval(cap_with_matrix(n, "A", true, false), b);
  c.expect_equal(apply_inputs(naive, in).as_scalar(), dot(u, a * w), "A on the covector leg gives u.(Aw)");
  if (a != Matrix(a.transpose())) c.expect(naive != left, "moving A across the cap without transposing changes the value");
  const Diagram g1 = to_graph(cap_with_matrix(n, "A", false, false));
  const Diagram g2 = to_graph(cap_with_matrix(n, "A", true, true));
  c.expect(g1.edges.size() == 1 && g2.edges.size() == 1 && g1.edges[0].labels.size() == 1 &&
               g2.edges[0].labels.size() == 1 && g1.edges[0].labels[0].name == g2.edges[0].labels[0].name &&
               g1.edges[0].labels[0].transposed == g2.edges[0].labels[0].transposed,
           "both placements give the same labelled edge");
}

void check_vertex_order_sign(CheckContext& c) {
  const int n = c.n();
  const Tensor t = c.eval(complemental_node(n - 1, n), {});
  LayeredDiagram crossed{n, pols(n - 1), {}};
  Slice cross = id_slice(n - 3);
  cross.pieces.push_back(CrossPiece{});
  crossed.layers = {cross, Slice{{vertex(Direction::Sink, n - 1, n)}}};
  c.expect_equal(c.eval(crossed, {}), Rational(-1) * t, "inputs crossed before the vertex");
  std::vector<int> cil = left_ciliation(n - 1, n);
  std::swap(cil[n - 3], cil[n - 2]);
  c.expect_equal(c.eval(complemental_node(n - 1, n, cil), {}), Rational(-1) * t, "ciliation swapped");
  std::vector<Vector> in;
  for (int i = 0; i < n - 1; ++i) in.push_back(c.vector("v" + std::to_string(i + 1)));
  std::vector<Vector> swapped = in;
  std::swap(swapped[n - 3], swapped[n - 2]);
  c.expect_equal(apply_inputs(t, swapped), Rational(-1) * apply_inputs(t, in), "inputs swapped");
}

void check_node_antisymmetry(CheckContext& c) {
  const int n = c.n();
  for (Direction dir : {Direction::Sink, Direction::Source})
    for (int k = 0; k <= n; ++k) {
      const Polarity p = dir == Direction::Sink ? Polarity::Vector : Polarity::Covector;
      auto node = [&](std::vector<int> cil) {
        return LayeredDiagram{n, pols(k, p), {Slice{{VertexPiece{dir, k, std::move(cil)}}}}};
      };
      const std::string tag = std::string(to_string(dir)) + " with " + std::to_string(k) + " lower wires";
      const std::vector<int> base = left_ciliation(k, n);
      const Tensor t = c.eval(node(base), {});
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> cil = base;
        std::swap(cil[i], cil[i + 1]);
        c.expect_equal(c.eval(node(cil), {}), Rational(-1) * t,
                       tag + ": ciliation positions " + std::to_string(i + 1) + "," + std::to_string(i + 2) + " swapped");
      }
      std::vector<int> rot = base;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      c.expect_equal(c.eval(node(rot), {}), Rational(n % 2 ? 1 : -1) * t, tag + ": cilium moved across one edge");
      if (k >= 2) {
        const Vector u = c.vector("u");
        std::vector<Vector> in{u, u};
        for (int i = 2; i < k; ++i) in.push_back(c.vector("x" + std::to_string(i + 1)));
        c.expect(apply_inputs(t, in).is_zero(), tag + ": equal inputs give zero");
      }
    }
}

void check_matrix_invariance(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A", true);
  const Rational d = det_oracle(a);
  const Bindings b{{"A", a}, {"Ab", inverse_oracle(a)}};
  for (int k = 0; k <= n; ++k) {
    const std::string tag = " (" + std::to_string(k) + " lower wires)";
    const VertexPiece snk = vertex(Direction::Sink, k, n);
    const VertexPiece src = vertex(Direction::Source, k, n);
    const Tensor plain_sink = c.eval(stack(n, pols(k), {Slice{{snk}}}), b);
    const Tensor plain_source = c.eval(stack(n, pols(k, Polarity::Covector), {Slice{{src}}}), b);

    c.expect_equal(
        c.eval(stack(n, pols(k), {row(k, MatPiece{"A"}), Slice{{snk}}, row(n - k, MatPiece{"A", true})}), b),
        d * plain_sink, "A on every edge of a sink" + tag);
    c.expect_equal(c.eval(stack(n, pols(k, Polarity::Covector),
                                {row(k, MatPiece{"A", true}), Slice{{src}}, row(n - k, MatPiece{"A"})}),
                          b),
                   d * plain_source, "A on every edge of a source" + tag);
    c.expect_equal(c.eval(stack(n, pols(k), {row(k, MatPiece{"A"}), Slice{{snk}}}), b),
                   d * c.eval(stack(n, pols(k), {Slice{{snk}}, row(n - k, MatPiece{"Ab", true})}), b),
                   "A on the lower edges of a sink moved to the upper edges as its inverse" + tag);
    c.expect_equal(c.eval(stack(n, pols(k, Polarity::Covector), {row(k, MatPiece{"A", true}), Slice{{src}}}), b),
                   d * c.eval(stack(n, pols(k, Polarity::Covector), {Slice{{src}}, row(n - k, MatPiece{"Ab"})}), b),
                   "A on the lower edges of a source moved to the upper edges as its inverse" + tag);
  }
}

void check_complemental_node(CheckContext& c) {
  const int n = c.n();
  for (int k = 0; k <= n; ++k) {
    const Tensor t = c.eval(complemental_node(k, n), {});
    Tensor want(n, n - k, k);
    for (std::size_t f = 0; f < want.size(); ++f) {
      auto [out, in] = want.multi_index(f);
      std::vector<int> seq = in;
      seq.insert(seq.end(), out.rbegin(), out.rend());
      want.at(f) = Rational(inversion_sign(seq));
    }
    c.expect_equal(t, want, "node with " + std::to_string(k) + " inputs vs sgn(inputs, reversed outputs)");
  }
}

void check_asym_compare(CheckContext& c) {
  const int n = c.n();
  for (int k = 0; k <= n; ++k)
    c.expect_equal(c.eval(antisym_permsum(k, n), {}),
                   antisym_nodepair_scale(k, n) * c.eval(antisym_nodepair(k, n), {}),
                   "permutation sum vs scaled node pair, k=" + std::to_string(k));
}

void check_asym_zero(CheckContext& c) {
  c.expect(c.eval(antisym_permsum(c.n() + 1, c.n()), {}).is_zero(), "permutation sum on n+1 strands");
}

void check_asym_special(CheckContext& c) {
  const int n = c.n();
  const Rational s = sign_of(reversal_sign(n)) * factorial(n);
  c.expect_equal(c.eval(vertex_pair(n, std::vector<std::vector<std::string>>(n)), {}).as_scalar(), s,
                 "closed node pair");
  const Matrix a = c.matrix("A");
  c.expect_equal(
      c.eval(vertex_pair(n, std::vector<std::vector<std::string>>(n, {"A"})), {{"A", a}}).as_scalar(),
      s * det_oracle(a), "closed node pair with A on every strand");
  c.expect_equal(c.eval(antisym_nodepair(n, n), {}),
                 sign_of(reversal_sign(n)) * c.eval(antisym_permsum(n, n), {}), "sink stacked on codeterminant");
}

void check_minus2v(CheckContext& c) {
  const int n = c.n();
  const Rational k = sign_of(reversal_sign(n)) * factorial(n - 1);
  const Tensor t = c.eval(antisym_nodepair(1, n), {});
  c.expect_equal(t, k * Tensor::identity(n, 1), "double vertex with one through strand");
  for (int i = 1; i <= n; ++i) {
    const Vector e = basis_vector(n, i);
    c.expect(apply_inputs(t, std::span(&e, 1)).as_vector() == Vector(k * e), "basis vector " + std::to_string(i));
  }
  const Vector v = random_rational_vector(n, c.rng());
  c.note("v", v);
  c.expect(apply_inputs(t, std::span(&v, 1)).as_vector() == Vector(k * v), "random rational vector");
}

void check_adjugate_formula(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Rational d = det_oracle(a);
  const Tensor t = c.eval(adjugate_closed_form(n, "A"), {{"A", a}});
  const Proportionality p = tensors_proportional(t, Tensor::identity(n, 1));
  const Rational want = sign_of(reversal_sign(n)) * factorial(n - 1) * d;
  if (d.is_zero())
    c.expect(t.is_zero(), "singular A gives the zero map");
  else
    c.expect(p.status == Proportionality::Status::Proportional && p.ratio == want,
             "constant " + (p.has_ratio() ? p.ratio.str() : p.str()) + " vs " + want.str());
}

void check_adjugate_elements(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Tensor t = c.eval(adjugate_diagram(n, "A"), {{"A", a}});
  c.expect_equal(adjugate_scale(n) * t, Tensor::from_matrix(adjugate_oracle(a)), "scaled diagram vs adj(A)");
}

void check_cramer(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A", true);
  const Vector b = c.vector("b");
  const CramerSolution sol = cramer_solve(a, b, n <= 3 ? Evaluator::Both : Evaluator::Contraction);
  c.expect(!sol.singular, "invertible A reported singular");
  c.expect_equal(sol.det, det_oracle(a), "diagram determinant");
  const Vector want = inverse_oracle(a) * b;
  for (int j = 0; j < n; ++j) c.expect_equal(sol.x(j), want(j), "x_" + std::to_string(j + 1));
  c.expect(Vector(a * sol.x) == b, "A x = b");
  Matrix s = a;
  s.col(n - 1) = s.col(0);
  c.expect(cramer_solve(s, b, Evaluator::Contraction).singular, "repeated column reported singular");
}

void check_crossout(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Vector b = c.vector("b");
  const int j = static_cast<int>(c.rng()() % static_cast<std::uint64_t>(n));
  const Matrix aj = replace_column(a, j, b);
  const Bindings bind{{"A", a}, {"Aj", aj}, {"P", nullifier(n, j)}};
  const std::string tag = " (j=" + std::to_string(j + 1) + ")";
  c.expect_equal(c.eval(LayeredDiagram{n, pols(1), {Slice{{MatPiece{"P"}}}, Slice{{MatPiece{"A"}}}}}, bind),
                 c.eval(LayeredDiagram{n, pols(1), {Slice{{MatPiece{"P"}}}, Slice{{MatPiece{"Aj"}}}}}, bind),
                 "A and A_j after the nullifier" + tag);

  auto source_form = [&](const std::string& m) {
    Slice s{{IdPiece{}}};
    for (int i = 1; i < n; ++i) s.pieces.push_back(MatPiece{m});
    return LayeredDiagram{n, {}, {Slice{{vertex(Direction::Source, 0, n)}}, s}};
  };
  const Tensor ta = c.eval(source_form("A"), bind);
  const Tensor tj = c.eval(source_form("Aj"), bind);
  bool same = true;
  for (std::size_t f = 0; f < ta.size(); ++f)
    if (ta.multi_index(f).first[0] == j + 1 && ta.at(f) != tj.at(f)) same = false;
  c.expect(same, "source with index j on the bare strand" + tag);

  const Tensor adj_a = c.eval(adjugate_diagram(n, "A"), bind);
  const Tensor adj_j = c.eval(adjugate_diagram(n, "Aj"), bind);
  c.expect(adj_a.as_matrix().row(j) == adj_j.as_matrix().row(j), "row j of the adjugate diagram" + tag);
}

void check_cayley_hamilton(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Bindings b{{"A", a}};
  const Tensor t = c.eval(antisym_traced(n + 1, true, "A", n), b);
  c.expect(t.is_zero(), "open antisymmetrizer on n+1 strands");
  for (int i = 1; i <= n; ++i) {
    const Vector e = basis_vector(n, i);
    c.expect(apply_inputs(t, std::span(&e, 1)).is_zero(), "probe with basis vector " + std::to_string(i));
  }
  Matrix sum = Matrix::Zero(n, n);
  Matrix scaled_char = Matrix::Zero(n, n);
  const Polynomial p = charpoly_oracle(a);
  for (int i = 0; i <= n; ++i) {
    const Rational coef = sign_of(i % 2 ? -1 : 1) * factorial(n) / factorial(n - i) * closed_traced(c, n - i, b);
    const Matrix ai = matrix_power(a, i);
    sum += coef * ai;
    scaled_char += (factorial(n) * p.coeff(i)) * ai;
  }
  c.expect(sum == scaled_char, "expansion " + matrix_str(sum) + " vs n! p(A) " + matrix_str(scaled_char));
  c.expect(sum == Matrix::Zero(n, n), "expanded sum is the zero matrix");
}

void check_char_coefficients(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Bindings b{{"A", a}};
  const Polynomial p = charpoly_oracle(a);
  for (int i = 0; i <= n; ++i) {
    const Rational pair = c.eval(vertex_pair_split(n, "A", n - i, "", i), b).as_scalar();
    const Rational ci = sign_of(i % 2 ? -reversal_sign(n) : reversal_sign(n)) / (factorial(i) * factorial(n - i)) * pair;
    c.expect_equal(ci, p.coeff(i), "coefficient of x^" + std::to_string(i) + " from the split node pair");
    const Rational traced = sign_of(i % 2 ? -1 : 1) * factorial(n) / factorial(n - i) * closed_traced(c, n - i, b);
    c.expect_equal(traced, factorial(n) * p.coeff(i), "n! times coefficient of x^" + std::to_string(i));
  }
}

void check_det_sum(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Matrix bm = c.matrix("B");
  const Bindings b{{"A", a}, {"B", bm}};
  Rational total(0);
  for (int i = 0; i <= n; ++i)
    total += binomial(n, i) * c.eval(vertex_pair_split(n, "A", n - i, "B", i), b).as_scalar();
  c.expect_equal(sign_of(reversal_sign(n)) / factorial(n) * total, det_oracle(Matrix(a + bm)), "det(A+B)");
}

void check_asym_sum(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Bindings b{{"A", a}};
  std::vector<Rational> closed;
  for (int m = 0; m <= n; ++m) {
    closed.push_back(closed_traced(c, m, b));
    Rational want(0);
    for (const Permutation& s : all_permutations(m)) {
      Rational term(s.sign());
      for (const auto& cyc : s.cycles()) term *= trace(matrix_power(a, static_cast<int>(cyc.size())));
      want += term;
    }
    if (m == 0) want = Rational(1);
    c.expect_equal(closed.back(), want, "closed sum on " + std::to_string(m) + " strands vs cycle traces");
  }
  for (int k = 0; k <= n; ++k) {
    Tensor total(n, 1, 1);
    for (int i = 0; i <= k; ++i) {
      const Tensor part = c.eval(antisym_traced_by_cycle(k + 1, "A", n, i + 1), b);
      const Rational coef = sign_of(i % 2 ? -1 : 1) * factorial(k) / factorial(k - i) * closed[k - i];
      c.expect_equal(part, coef * c.eval(matrix_power_strand(n, "A", i), b),
                     "k=" + std::to_string(k) + ", term A^" + std::to_string(i));
      total += part;
    }
    c.expect_equal(c.eval(antisym_traced(k + 1, true, "A", n), b), total, "k=" + std::to_string(k) + " full sum");
  }
}

void check_binet_cauchy(CheckContext& c) {
  const BinetCauchyPair p = binet_cauchy_pair();
  const Tensor l = c.eval(p.lhs, {});
  c.expect_equal(l, c.eval(p.rhs, {}), "vertex pair vs dot product pairings");
  const Vector u = c.vector("u"), v = c.vector("v"), w = c.vector("w"), x = c.vector("x");
  const std::vector<Vector> in{u, v, w, x};
  const Rational value = apply_inputs(l, in).as_scalar();
  c.expect_equal(value, dot(u, w) * dot(v, x) - dot(u, x) * dot(v, w), "value vs (u.w)(v.x) - (u.x)(v.w)");
  c.expect_equal(value, dot(cross3(u, v), cross3(w, x)), "value vs (u x v).(w x x)");
}

void check_cross_product(CheckContext& c) {
  const int n = c.n();
  std::vector<Vector> vs;
  for (int i = 0; i < n - 1; ++i) vs.push_back(c.vector("a" + std::to_string(i + 1)));
  const Vector x = c.vector("x");
  const Vector w = cross_product(vs, Evaluator::Both);
  for (int i = 0; i < n - 1; ++i) c.expect(dot(w, vs[i]).is_zero(), "orthogonal to a" + std::to_string(i + 1));
  std::vector<Vector> cols = vs;
  cols.push_back(x);
  c.expect_equal(dot(w, x), det_oracle(columns(cols)), "pairing with x vs det[a1 .. x]");
  if (n == 3) c.expect(w == cross3(vs[0], vs[1]), "classical cross product");
}

Tensor jacobi_lhs(CheckContext& c, int k, const Bindings& b) {
  const LayeredDiagram d = jacobi_diagrams(k, c.n(), "A").lhs;
  return c.eval(d, b, c.n() <= 3 ? Evaluator::Both : Evaluator::Layered);
}

void check_jacobi(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A", true);
  const Bindings b{{"A", a}};
  const Rational d = det_oracle(a);
  const Matrix adj = adjugate_oracle(a);
  for (int k = 0; k <= n; ++k) {
    const std::string tag = " (k=" + std::to_string(k) + ")";
    const Tensor l = jacobi_lhs(c, k, b);
    const Tensor r = c.eval(jacobi_through_form(k, n, "A"), b);
    c.expect_equal(l, jacobi_scale(k, n) * (k == 0 ? d.reciprocal() : power(d, k - 1)) * r,
                   "four-vertex figure vs node pair with A on the through strands" + tag);
    if (k == 0) continue;
    // Entries on increasing index sets against complementary minors of adj(A).
    const Rational base = jacobi_scale(k, n) * sign_of(reversal_sign(n)) * factorial(k);
    for (const auto& alpha : subsets(n, n - k))
      for (const auto& beta : subsets(n, n - k)) {
        const int parity = std::accumulate(alpha.begin(), alpha.end(), 0) + std::accumulate(beta.begin(), beta.end(), 0);
        const Rational minor = det_oracle(submatrix(adj, complement(n, alpha), complement(n, beta)));
        c.expect_equal(l(beta, alpha), base * sign_of(parity % 2 ? -1 : 1) * minor, "entry vs minor of adj(A)" + tag);
      }
  }
}

void check_dodgson(CheckContext& c) {
  const int n = c.n();
  const Matrix a = c.matrix("A");
  const Bindings b{{"A", a}};
  auto m = [&](int i, int j) { return det_oracle(minor_matrix(a, i, j)); };
  const Rational cond = m(0, 0) * m(n - 1, n - 1) - m(0, n - 1) * m(n - 1, 0);
  std::vector<int> inner(n - 2);
  std::iota(inner.begin(), inner.end(), 2);
  c.expect_equal(det_oracle(a) * det_oracle(submatrix(a, inner, inner)), cond, "condensation on the oracle side");
  const Tensor l = jacobi_lhs(c, 2, b);
  c.expect_equal(l(inner, inner), jacobi_scale(2, n) * sign_of(reversal_sign(n)) * Rational(2) * cond,
                 "two-column figure on the interior indices vs corner minors");
}

std::vector<IdentityCheck> make_registry() {
  return {
      {"trace_loop", "a closed loop through A evaluates to tr(A)", 2, 5, false, check_trace_loop},
      {"loop_dim", "a closed unlabelled loop evaluates to n", 2, 5, false, check_loop_dim},
      {"det_permsum_vs_oracle", "the signed sum of permuted A strands has det(A) as its (1..n; 1..n) entry", 2, 4,
       false, check_det_permsum},
      {"kink_identity", "a strand with a kink is the identity strand", 2, 4, false, check_kink},
      {"cup_swap", "a reversed cup followed by a crossing equals the plain cup", 2, 4, false, check_cup_swap},
      {"triple_isotopy", "four drawings of the triple vertex give det[u v w]", 3, 3, false, check_triple_isotopy},
      {"cap_transpose_regression", "a matrix slid around a cap becomes its transpose", 2, 4, false,
       check_cap_transpose},
      {"vertex_order_sign", "crossing two inputs of a vertex negates it", 3, 4, false, check_vertex_order_sign},
      {"node_antisymmetry", "adjacent ciliation swaps negate a vertex and equal inputs vanish", 2, 4, false,
       check_node_antisymmetry},
      {"matrix_invariance", "A on every edge of a vertex scales it by det(A); lower A moves up as its inverse", 2, 4,
       false, check_matrix_invariance},
      {"complemental_node_formula", "a vertex with k inputs maps basis inputs to signed complementary outputs", 2, 4,
       false, check_complemental_node},
      {"asym_compare", "the permutation-sum antisymmetrizer is a scaled node pair", 2, 4, false, check_asym_compare},
      {"asym_zero_beyond_n", "the antisymmetrizer on n+1 strands vanishes", 2, 4, false, check_asym_zero},
      {"asym_special_cases", "closed node pairs give (-1)^floor(n/2) n! and that times det(A)", 2, 4, false,
       check_asym_special},
      {"worked_example_minus2v", "the node pair with one through strand is (-1)^floor(n/2) (n-1)! times identity", 2,
       4, false, check_minus2v},
      {"adjugate_formula", "the adjugate figure composed with A is (-1)^floor(n/2) (n-1)! det(A) times identity", 2,
       4, false, check_adjugate_formula},
      {"adjugate_elements", "the scaled adjugate figure has the entries of adj(A)", 2, 4, false,
       check_adjugate_elements},
      {"cramer", "column replacement in the adjugate figure solves Ax = b", 2, 4, false, check_cramer},
      {"crossout_lemma", "column j of A is invisible wherever index j is fixed", 2, 4, false, check_crossout},
      {"cayley_hamilton", "the open antisymmetrizer on n+1 traced strands vanishes; its expansion is n! p(A)", 2, 4,
       false, check_cayley_hamilton},
      {"char_coefficients", "split node pairs and closed traced sums give the characteristic coefficients", 2, 4,
       false, check_char_coefficients},
      {"det_sum", "det(A+B) is a binomial sum of split node pairs", 2, 4, false, check_det_sum},
      {"asym_sum_decomposition", "the open traced antisymmetrizer splits by the cycle through the open strand", 2, 4,
       false, check_asym_sum},
      {"binet_cauchy", "(u x v).(w x x) = (u.w)(v.x) - (u.x)(v.w) as diagrams", 3, 3, false, check_binet_cauchy},
      {"generalized_cross_product", "the vertex with n-1 inputs is a cross product in dimension n", 2, 4, false,
       check_cross_product},
      {"jacobi", "k adjugate columns equal det(A)^(k-1) times the node pair with A on the through strands", 2, 4,
       true, check_jacobi},
      {"dodgson", "two adjugate columns give the condensation formula", 3, 4, true, check_dodgson},
  };
}

}  // namespace

Rng derive_rng(std::uint64_t seed, std::string_view id, int n, int trial) {
  std::uint64_t x = seed ^ fnv1a(id);
  x ^= splitmix(x) + static_cast<std::uint64_t>(n) * 0x1000193ULL;
  x ^= splitmix(x) + static_cast<std::uint64_t>(trial);
  return Rng(splitmix(x));
}

long long random_int(Rng& rng, long long bound) {
  if (bound < 0) throw std::invalid_argument("random_int: negative bound");
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = Rng::max() - Rng::max() % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return static_cast<long long>(r % span) - bound;
}

Matrix random_matrix(int n, Rng& rng, int bound, bool invertible) {
  if (bound < 1) throw std::invalid_argument("random_matrix: bound must be at least 1");
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(random_int(rng, bound));
    if (!invertible || !det_oracle(m).is_zero()) return m;
  }
  throw std::runtime_error("random_matrix: no invertible sample in 32 attempts");
}

Vector random_vector(int n, Rng& rng, int bound) {
  if (bound < 1) throw std::invalid_argument("random_vector: bound must be at least 1");
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(random_int(rng, bound));
  return v;
}

Vector random_rational_vector(int n, Rng& rng, int bound) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(random_int(rng, bound), random_int(rng, (bound - 1) / 2) + (bound + 1) / 2);
  return v;
}

Vector basis_vector(int n, int i) {
  Vector v = Vector::Constant(n, Rational(0));
  v(i - 1) = Rational(1);
  return v;
}

CheckContext::CheckContext(int n, int trial, Rng rng, const Bindings* fixture)
    : n_(n), trial_(trial), rng_(rng), fixture_(fixture) {}

Matrix CheckContext::matrix(const std::string& name, bool invertible) {
  Matrix m;
  if (fixture_ && fixture_->count(name))
    m = fixture_->find(name)->second;
  else
    m = random_matrix(n_, rng_, 9, invertible);
  matrices_[name] = m;
  return m;
}

Vector CheckContext::vector(const std::string& name) {
  Vector v = random_vector(n_, rng_);
  vectors_[name] = v;
  return v;
}

Tensor CheckContext::eval(const LayeredDiagram& d, const Bindings& b) {
  return eval(d, b, layered_cost(d) <= kBothBudget ? Evaluator::Both : Evaluator::Contraction);
}

Tensor CheckContext::eval(const LayeredDiagram& d, const Bindings& b, Evaluator which) {
  return evaluate(d, b, which).tensor;
}

Tensor CheckContext::eval(const FormalSum& s, const Bindings& b) {
  double cost = 0;
  for (const Term& t : s) cost += layered_cost(t.diagram);
  return evaluate(s, b, cost <= kBothBudget ? Evaluator::Both : Evaluator::Contraction).tensor;
}

void CheckContext::expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

void CheckContext::expect_equal(const Tensor& got, const Tensor& want, const std::string& what) {
  if (got.out_arity() != want.out_arity() || got.in_arity() != want.in_arity())
    throw CheckFailure(what + ": shape " + got.shape_str() + " vs " + want.shape_str());
  if (auto diff = first_difference(got, want)) throw CheckFailure(what + ": " + diff->str());
}

void CheckContext::expect_equal(const Rational& got, const Rational& want, const std::string& what) {
  if (got != want) throw CheckFailure(what + ": " + got.str() + " vs " + want.str());
}

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> reg = make_registry();
  return reg;
}

const IdentityCheck& find_identity(std::string_view id) {
  for (const auto& c : identity_registry())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

IdentityReport run_check(std::string_view id, int n, int trials, std::uint64_t seed, const Bindings* fixture) {
  const IdentityCheck& chk = find_identity(id);
  if (n < chk.min_n || n > chk.max_n)
    throw std::invalid_argument(chk.id + " supports n in " + std::to_string(chk.min_n) + ".." +
                                std::to_string(chk.max_n) + ", got " + std::to_string(n));
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  IdentityReport rep;
  rep.id = chk.id;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < trials; ++t) {
    CheckContext ctx(n, t, derive_rng(seed, chk.id, n, t), fixture);
    std::string message;
    try {
      chk.procedure(ctx);
      continue;
    } catch (const CheckFailure& e) {
      message = e.what();
    } catch (const std::exception& e) {
      message = std::string("error: ") + e.what();
    }
    rep.outcome = Outcome::Fail;
    rep.failure = Counterexample{t, ctx.matrices(), ctx.vectors(), message};
    break;
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

std::vector<IdentityReport> run_all(int max_n, int trials, std::uint64_t seed, bool stretch) {
  if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
  std::vector<IdentityReport> out;
  for (const auto& chk : identity_registry()) {
    if (chk.stretch && !stretch) continue;
    for (int n = std::max(2, chk.min_n); n <= std::min(max_n, chk.max_n); ++n)
      out.push_back(run_check(chk.id, n, trials, seed));
  }
  return out;
}

}  // namespace td
