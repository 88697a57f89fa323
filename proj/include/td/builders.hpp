#pragma once

#include <optional>
#include <string>
#include <vector>

#include "td/diagram.hpp"
#include "td/eval.hpp"

namespace td {

// Closed loop; evaluates to n.
LayeredDiagram loop_diagram(int n);
// Closed loop through one matrix; evaluates to tr(A).
LayeredDiagram trace_loop(int n, const std::string& name);

// Signed permutation sum of A-labelled strands; the (1..n; 1..n) entry of the
// sum is det(A).
FormalSum det_permsum(int n, const std::string& name);

// Source vertex at the bottom, sink at the top, strand i joining slot i of each.
// labels[i] lists the matrices on strand i in the order they act.
LayeredDiagram vertex_pair(int n, const std::vector<std::vector<std::string>>& labels);
// vertex_pair with the first `a` strands labelled a_name and the next `b` strands b_name
// (an empty name leaves those strands bare).
LayeredDiagram vertex_pair_split(int n, const std::string& a_name, int a, const std::string& b_name, int b);

// Antisymmetrizer on k vector strands as the signed sum over S_k.
FormalSum antisym_permsum(int k, int n);
// Sink taking k inputs below, source above emitting k outputs, n-k strands between.
LayeredDiagram antisym_nodepair(int k, int n);
Rational antisym_nodepair_scale(int k, int n);

// Sink with k vector inputs and n-k covector outputs.
LayeredDiagram complemental_node(int k, int n);
LayeredDiagram complemental_node(int k, int n, std::vector<int> ciliation);
// Source with n outputs.
LayeredDiagram codeterminant(int n);

// One strand in, one out; n-1 strands labelled A from the upper source down to
// the lower sink.
LayeredDiagram adjugate_diagram(int n, const std::string& name);
// Multiplier turning the adjugate diagram into adj(A).
Rational adjugate_scale(int n);
// adjugate_diagram preceded by the matrix on its input strand.
LayeredDiagram adjugate_closed_form(int n, const std::string& name);

struct CramerSolution {
  bool singular = false;
  Rational det;  // diagram-side determinant
  Vector x;      // empty when singular
};

// Solves Ax = b through the adjugate diagram with column j replaced by b.
CramerSolution cramer_solve(const Matrix& a, const Vector& b, Evaluator which = Evaluator::Contraction);
// Matrix equal to the identity except for a zero at (j, j), 0-based j.
Matrix nullifier(int n, int j);

// Signed permutation sum over S_m of m strands, each through the matrix and
// closed to a loop on the right. With `open`, the first strand is an unlabelled
// through strand instead of a loop.
FormalSum antisym_traced(int m, bool open, const std::string& name, int n);
// The same sum restricted to permutations whose cycle through 1 has the given length.
FormalSum antisym_traced_by_cycle(int m, const std::string& name, int n, int cycle_length);
// A single strand carrying `power` copies of the matrix.
LayeredDiagram matrix_power_strand(int n, const std::string& name, int power);

// n-1 vector inputs, one covector output.
LayeredDiagram cross_product_node(int n);
Vector cross_product(const std::vector<Vector>& vs, Evaluator which = Evaluator::Contraction);

struct BinetCauchyPair {
  LayeredDiagram lhs;  // inputs u, v (vectors), w, x (covectors)
  FormalSum rhs;
};
BinetCauchyPair binet_cauchy_pair();

// Isotopy fixtures.
LayeredDiagram kink(int n, bool mirrored, Polarity strand);
LayeredDiagram cup_crossed(int n);
// Four presentations of det[u v w] at n = 3 with inputs u, v, w.
std::vector<LayeredDiagram> triple_presentations();
// Inputs (vector, covector) closed by a cap with a matrix on the chosen leg.
LayeredDiagram cap_with_matrix(int n, const std::string& name, bool on_right, bool transpose);

struct JacobiPair {
  LayeredDiagram lhs;
  LayeredDiagram rhs;
};
// k columns of adjugate-type vertex pairs between a sink and a source. rhs is
// the node pair with the matrix on its k middle strands.
JacobiPair jacobi_diagrams(int k, int n, const std::string& name);
// Plain node pair with the matrix on its n-k through strands.
LayeredDiagram jacobi_through_form(int k, int n, const std::string& name);
// ((-1)^floor(n/2) (n-1)!)^k: lhs = jacobi_scale * det^(k-1) * through form.
Rational jacobi_scale(int k, int n);

}  // namespace td
