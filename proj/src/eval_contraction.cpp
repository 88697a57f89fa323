#include <algorithm>
#include <deque>

#include "td/eval.hpp"
#include "eval_internal.hpp"

namespace td {

namespace {

struct EdgeFactor {
  Matrix m;
  bool identity = false;
};

class Contractor {
 public:
  Contractor(const Diagram& g, const Bindings& b, Tensor& out, const Rational& coeff)
      : g_(g), n_(g.n), out_(out), coeff_(coeff) {
    if (auto v = validate_graph(g); !v.empty()) throw DiagramError(std::move(v));
    check_bindings(matrix_names(g), n_, b);
    if (out.dim() != n_ || out.out_arity() != g.output_count() || out.in_arity() != g.input_count())
      throw std::invalid_argument("contraction target has the wrong shape");

    const int ne = static_cast<int>(g.edges.size());
    factors_.resize(ne);
    Rational loops(1);
    for (int e = 0; e < ne; ++e) {
      const Edge& edge = g.edges[e];
      factors_[e].identity = edge.labels.empty();
      if (!factors_[e].identity) factors_[e].m = edge_matrix(edge, n_, b);
      if (edge.is_loop()) loops *= factors_[e].identity ? Rational(n_) : trace(factors_[e].m);
    }
    coeff_ *= loops;

    for (const Permutation& p : all_permutations(n_)) {
      std::vector<int> v(n_);
      for (int i = 0; i < n_; ++i) v[i] = p(i + 1) - 1;
      perms_.push_back(std::move(v));
      perm_signs_.push_back(p.sign());
    }
    order_steps();
    tail_val_.assign(ne, -1);
    head_val_.assign(ne, -1);
    out_index_.assign(g.output_count(), 0);
    in_index_.assign(g.input_count(), 0);
  }

  std::size_t run() {
    if (coeff_.is_zero()) return 0;
    products_.assign(steps_.size() + 1, Rational(0));
    products_[0] = coeff_;
    descend(0);
    return leaves_;
  }

 private:
  // Nodes in breadth-first order, then boundary vertices.
  void order_steps() {
    const int nv = static_cast<int>(g_.vertices.size());
    std::vector<std::vector<int>> adj(nv);
    for (const Edge& e : g_.edges) {
      if (e.is_loop()) continue;
      adj[e.tail].push_back(e.head);
      adj[e.head].push_back(e.tail);
    }
    std::vector<char> seen(nv, 0);
    for (int s = 0; s < nv; ++s) {
      if (seen[s] || g_.vertices[s].kind != VertexKind::Node) continue;
      std::deque<int> q{s};
      seen[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        steps_.push_back(v);
        for (int w : adj[v])
          if (!seen[w] && g_.vertices[w].kind == VertexKind::Node) {
            seen[w] = 1;
            q.push_back(w);
          }
      }
    }
    for (int v = 0; v < nv; ++v)
      if (g_.vertices[v].kind != VertexKind::Node) steps_.push_back(v);

    std::vector<int> step_of(nv, -1);
    for (std::size_t i = 0; i < steps_.size(); ++i) step_of[steps_[i]] = static_cast<int>(i);
    completes_.assign(steps_.size(), {});
    for (int e = 0; e < static_cast<int>(g_.edges.size()); ++e) {
      const Edge& edge = g_.edges[e];
      if (edge.is_loop()) continue;
      completes_[std::max(step_of[edge.tail], step_of[edge.head])].push_back(e);
    }
  }

  void set_end(const EndRef& r, int value) { (r.head ? head_val_ : tail_val_)[r.edge] = value; }

  // Multiplies in the edges closed at this step; false when the product vanishes.
  bool close_edges(std::size_t step, Rational& prod) {
    for (int e : completes_[step]) {
      const int h = head_val_[e], t = tail_val_[e];
      if (factors_[e].identity) {
        if (h != t) return false;
        continue;
      }
      const Rational& f = factors_[e].m(h, t);
      if (f.is_zero()) return false;
      if (!f.is_one()) prod *= f;
    }
    return true;
  }

  void descend(std::size_t step) {
    if (step == steps_.size()) {
      std::size_t flat = 0;
      for (int v : out_index_) flat = flat * n_ + v;
      for (int v : in_index_) flat = flat * n_ + v;
      out_.at(flat) += products_[step];
      ++leaves_;
      return;
    }
    const GraphVertex& v = g_.vertices[steps_[step]];
    if (v.kind == VertexKind::Node) {
      for (std::size_t p = 0; p < perms_.size(); ++p) {
        for (int i = 0; i < n_; ++i) set_end(v.ends[i], perms_[p][i]);
        Rational prod = perm_signs_[p] > 0 ? products_[step] : -products_[step];
        if (!close_edges(step, prod)) continue;
        products_[step + 1] = std::move(prod);
        descend(step + 1);
      }
    } else {
      auto& slot = v.kind == VertexKind::Output ? out_index_[v.position - 1] : in_index_[v.position - 1];
      for (int x = 0; x < n_; ++x) {
        set_end(v.ends[0], x);
        slot = x;
        Rational prod = products_[step];
        if (!close_edges(step, prod)) continue;
        products_[step + 1] = std::move(prod);
        descend(step + 1);
      }
    }
  }

  const Diagram& g_;
  const int n_;
  Tensor& out_;
  Rational coeff_;
  std::vector<EdgeFactor> factors_;
  std::vector<std::vector<int>> perms_;
  std::vector<int> perm_signs_;
  std::vector<int> steps_;
  std::vector<std::vector<int>> completes_;
  std::vector<int> tail_val_, head_val_;
  std::vector<int> out_index_, in_index_;
  std::vector<Rational> products_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::size_t contract_into(const Diagram& g, const Bindings& b, Tensor& out, const Rational& coeff) {
  Contractor c(g, b, out, coeff);
  return c.run();
}

EvalResult eval_contraction_detailed(const Diagram& g, const Bindings& b) {
  const auto t0 = std::chrono::steady_clock::now();
  EvalResult r;
  r.tensor = Tensor(g.n, g.output_count(), g.input_count());
  r.term_count = contract_into(g, b, r.tensor, Rational(1));
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

Tensor eval_contraction(const Diagram& g, const Bindings& b) { return eval_contraction_detailed(g, b).tensor; }

Tensor eval_contraction(const LayeredDiagram& d, const Bindings& b) { return eval_contraction(to_graph(d), b); }

}  // namespace td
