// Acceptance criteria: one line per criterion. Exit status is nonzero when any
// blocking criterion fails; criterion 13 is reported but never blocks.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gen.hpp"
#include "td/builders.hpp"
#include "td/identities.hpp"
#include "td/io.hpp"

using namespace td;

namespace {

constexpr double kFixtureSeconds = 1.0;
constexpr double kSuiteSeconds = 60.0;
constexpr std::uint64_t kSeed = 42;

struct Verdict {
  bool ok = true;
  std::string detail;
};

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void checks(const std::string& id, int lo, int hi, int trials) {
    for (int n = lo; n <= hi; ++n) {
      const IdentityReport r = run_check(id, n, trials, kSeed);
      ++runs_;
      require(r.passed(), r.passed() ? "" : report_text(r, false));
    }
  }
  Verdict result(const std::string& pass_detail) {
    if (out_.ok) out_.detail = pass_detail;
    return out_;
  }
  int runs() const { return runs_; }

 private:
  Verdict out_;
  int runs_ = 0;
};

Tensor both(const LayeredDiagram& d, const Bindings& b = {}) { return evaluate(d, b, Evaluator::Both).tensor; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict c1_fixture() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  const Matrix a = parse_matrix({{"2", "3"}, {"4", "5"}});
  const Bindings b{{"A", a}};
  c.require(both(trace_loop(2, "A"), b).as_scalar() == Rational(7), "trace diagram is not 7");
  const Rational pair = both(vertex_pair(2, {{"A"}, {"A"}}), b).as_scalar();
  c.require(pair / Rational(-2) == Rational(-2), "closed pair does not give det -2");
  const std::vector<int> idx{1, 2};
  c.require(evaluate(det_permsum(2, "A"), b, Evaluator::Both).tensor(idx, idx) == Rational(-2),
            "permutation sum does not give det -2");
  // Characteristic coefficients from split node pairs.
  std::vector<Rational> coeff;
  for (int i = 0; i <= 2; ++i) {
    const Rational p = both(vertex_pair_split(2, "A", 2 - i, "", i), b).as_scalar();
    coeff.push_back(Rational(i % 2 ? 1 : -1) / (factorial(i) * factorial(2 - i)) * p);
  }
  c.require(coeff == std::vector<Rational>{Rational(-2), Rational(-7), Rational(1)}, "coefficients are not -2, -7, 1");
  // Expansion of the traced antisymmetrizer: 2!(A^2 - 7A - 2I).
  std::vector<Rational> expansion;
  Matrix sum = Matrix::Zero(2, 2);
  for (int i = 0; i <= 2; ++i) {
    const Rational closed = evaluate(antisym_traced(2 - i, false, "A", 2), b, Evaluator::Both).tensor.as_scalar();
    expansion.push_back(Rational(i % 2 ? -1 : 1) * factorial(2) / factorial(2 - i) * closed);
    sum += expansion.back() * matrix_power(a, i);
  }
  c.require(expansion == std::vector<Rational>{Rational(-4), Rational(-14), Rational(2)},
            "expansion coefficients are not 2!(-2, -7, 1)");
  c.require(sum == Matrix(Matrix::Zero(2, 2)), "expanded sum is not zero");
  c.require(both(LayeredDiagram{2, {Polarity::Vector}, {}}, {}) == Tensor::identity(2, 1), "identity strand");
  c.require(evaluate(antisym_traced(3, true, "A", 2), b, Evaluator::Both).tensor.is_zero(),
            "open antisymmetrizer is not zero");
  const double s = seconds_since(t0);
  c.require(s < kFixtureSeconds, "took " + std::to_string(s) + " s");
  return c.result("tr=7, det=-2, x^2 - 7x - 2, 2!(A^2-7A-2I)=0 in " + std::to_string(s) + " s");
}

Verdict c2_loops() {
  Criterion c;
  for (int n = 2; n <= 5; ++n) c.require(both(loop_diagram(n)).as_scalar() == Rational(n), "loop at n=" + std::to_string(n));
  return c.result("loop = n for n = 2..5");
}

Verdict c3_minus2v() {
  Criterion c;
  const Tensor t = both(antisym_nodepair(1, 3));
  for (int i = 1; i <= 3; ++i) {
    const Vector e = basis_vector(3, i);
    c.require(apply_inputs(t, std::span(&e, 1)).as_vector() == Vector(Rational(-2) * e), "basis " + std::to_string(i));
  }
  Rng rng = derive_rng(kSeed, "acceptance-minus2v", 3, 0);
  for (int i = 0; i < 10; ++i) {
    const Vector v = random_rational_vector(3, rng);
    c.require(apply_inputs(t, std::span(&v, 1)).as_vector() == Vector(Rational(-2) * v), "random vector " + std::to_string(i));
  }
  return c.result("v -> -2v on 3 basis and 10 random rational vectors");
}

Verdict c4_asym() {
  Criterion c;
  c.checks("asym_compare", 2, 4, 1);
  c.checks("asym_zero_beyond_n", 2, 4, 1);
  const int want[] = {-2, -6, 24};
  for (int n = 2; n <= 4; ++n)
    c.require(both(vertex_pair(n, std::vector<std::vector<std::string>>(n))).as_scalar() == Rational(want[n - 2]),
              "closed pair at n=" + std::to_string(n));
  return c.result("all k <= n <= 4 exact; ASym(n+1) = 0; closed pairs -2, -6, 24");
}

Verdict c_checks(std::vector<std::string> ids, int lo, int hi, int trials, const std::string& detail) {
  Criterion c;
  for (const auto& id : ids) c.checks(id, std::max(lo, find_identity(id).min_n), std::min(hi, find_identity(id).max_n), trials);
  return c.result(detail + " (" + std::to_string(c.runs()) + " runs)");
}

Verdict c9_cross_eval() {
  Criterion c;
  gen::Gen g(909);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(g.integer(1, 3));
    const LayeredDiagram d = g.diagram(n);
    const Bindings b{{"A", g.matrix(n, n)}, {"B", g.matrix(n, n)}};
    try {
      eval_checked(d, b);
    } catch (const std::exception& e) {
      c.require(false, "fuzzed diagram " + std::to_string(i) + ": " + e.what());
    }
  }
  int builders = 0;
  for (int n = 2; n <= 3; ++n) {
    const Bindings b{{"A", g.matrix(n, n)}, {"B", g.matrix(n, n)}};
    std::vector<LayeredDiagram> ds{loop_diagram(n),       trace_loop(n, "A"),        adjugate_diagram(n, "A"),
                                   adjugate_closed_form(n, "A"), codeterminant(n),   cross_product_node(n),
                                   kink(n, true, Polarity::Covector), cup_crossed(n), cap_with_matrix(n, "A", true, true)};
    for (int k = 0; k <= n; ++k) {
      ds.push_back(antisym_nodepair(k, n));
      ds.push_back(complemental_node(k, n));
      ds.push_back(vertex_pair_split(n, "A", n - k, "B", k));
      ds.push_back(jacobi_diagrams(k, n, "A").lhs);
      ds.push_back(jacobi_diagrams(k, n, "A").rhs);
      for (const auto& t : antisym_permsum(k, n)) ds.push_back(t.diagram);
    }
    for (const auto& t : antisym_traced(n + 1, true, "A", n)) ds.push_back(t.diagram);
    for (const auto& t : det_permsum(n, "A")) ds.push_back(t.diagram);
    if (n == 3) {
      for (const auto& t : triple_presentations()) ds.push_back(t);
      ds.push_back(binet_cauchy_pair().lhs);
      for (const auto& t : binet_cauchy_pair().rhs) ds.push_back(t.diagram);
    }
    for (const auto& d : ds) {
      ++builders;
      try {
        eval_checked(d, b);
      } catch (const std::exception& e) {
        c.require(false, std::string("builder diagram: ") + e.what());
      }
    }
  }
  return c.result("200 fuzzed and " + std::to_string(builders) + " builder diagrams agree exactly");
}

Verdict c12_suite(const std::string& tdiag) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = tdiag + " check --all --max-n 4 --trials 10 --seed " + std::to_string(kSeed) + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "cannot run " + tdiag};
  std::string output, last;
  char buf[4096];
  while (fgets(buf, sizeof buf, pipe)) {
    output += buf;
    last = buf;
  }
  const int status = pclose(pipe);
  const double s = seconds_since(t0);
  if (!last.empty() && last.back() == '\n') last.pop_back();
  c.require(status == 0, "exit status " + std::to_string(status) + "\n" + output);
  c.require(s < kSuiteSeconds, "took " + std::to_string(s) + " s");
  return c.result(last + " in " + std::to_string(s) + " s");
}

Verdict c13_stretch() {
  Criterion c;
  c.checks("jacobi", 2, 4, 5);
  c.checks("dodgson", 3, 3, 5);
  return c.result("k adjugate columns = ((-1)^floor(n/2) (n-1)!)^k det^(k-1) x through form, n <= 4; condensation at n=3");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tdiag = argc > 1 ? argv[1] : "tdiag";
  struct Row {
    int id;
    bool blocking;
    std::function<Verdict()> run;
  };
  const std::vector<Row> rows{
      {1, true, c1_fixture},
      {2, true, c2_loops},
      {3, true, c3_minus2v},
      {4, true, c4_asym},
      {5, true, [] { return c_checks({"adjugate_formula", "adjugate_elements"}, 2, 4, 20, "20 random A per n"); }},
      {6, true, [] { return c_checks({"cramer"}, 2, 4, 20, "20 random invertible A and b per n"); }},
      {7, true, [] { return c_checks({"det_sum"}, 2, 4, 20, "20 random pairs per n"); }},
      {8, true, [] { return c_checks({"asym_sum_decomposition"}, 2, 4, 5, "every k <= n, term by term"); }},
      {9, true, c9_cross_eval},
      {10, true,
       [] {
         return c_checks({"kink_identity", "cup_swap", "triple_isotopy", "cap_transpose_regression", "vertex_order_sign"},
                         2, 4, 5, "isotopy regressions");
       }},
      {11, true, [] { return c_checks({"complemental_node_formula"}, 2, 4, 1, "every basis input, k <= n <= 4"); }},
      {12, true, [&] { return c12_suite(tdiag); }},
      {13, false, c13_stretch},
  };
  int failed = 0;
  for (const auto& r : rows) {
    Verdict o;
    try {
      o = r.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << r.id << (r.blocking ? "" : " (stretch, non-blocking)") << ": "
         << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok && r.blocking) ++failed;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " blocking criteria failed" : "acceptance: all blocking criteria pass")
            << std::endl;
  return failed ? 1 : 0;
}
