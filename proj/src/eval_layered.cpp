#include <cmath>

#include "eval_internal.hpp"

namespace td {

namespace {

std::size_t ipow(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

struct Entry {
  std::size_t in;
  std::size_t out;
  Rational val;
};

// Nonzero entries of a piece's local map, indices big-endian over its wires.
std::vector<Entry> piece_entries(const Piece& p, int n, const Bindings& b) {
  std::vector<Entry> es;
  const std::size_t nn = static_cast<std::size_t>(n);
  std::visit(
      [&](const auto& piece) {
        using T = std::decay_t<decltype(piece)>;
        if constexpr (std::is_same_v<T, MatPiece>) {
          const Matrix& a = b.find(piece.name)->second;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              const Rational& v = piece.transpose ? a(x, y) : a(y, x);
              if (!v.is_zero()) es.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(y), v});
            }
        } else if constexpr (std::is_same_v<T, CrossPiece>) {
          for (std::size_t x = 0; x < nn; ++x)
            for (std::size_t y = 0; y < nn; ++y) es.push_back({x * nn + y, y * nn + x, Rational(1)});
        } else if constexpr (std::is_same_v<T, CupPiece>) {
          for (std::size_t i = 0; i < nn; ++i) es.push_back({0, i * nn + i, Rational(1)});
        } else if constexpr (std::is_same_v<T, CapPiece>) {
          for (std::size_t i = 0; i < nn; ++i) es.push_back({i * nn + i, 0, Rational(1)});
        } else if constexpr (std::is_same_v<T, VertexPiece>) {
          for (const Permutation& q : all_permutations(n)) {
            // Slot s carries index q(s+1).
            std::vector<int> read;
            for (int s : piece.ciliation) read.push_back(q(s + 1));
            std::size_t in = 0, out = 0;
            for (int s = 0; s < piece.in; ++s) in = in * nn + (q(s + 1) - 1);
            for (int s = piece.in; s < n; ++s) out = out * nn + (q(s + 1) - 1);
            es.push_back({in, out, Rational(levi_civita(read))});
          }
        } else if constexpr (std::is_same_v<T, PermPiece>) {
          const int m = piece.perm.size();
          std::vector<int> digits(m), moved(m);
          for (std::size_t in = 0; in < ipow(n, m); ++in) {
            std::size_t rem = in;
            for (int i = m - 1; i >= 0; --i) {
              digits[i] = static_cast<int>(rem % nn);
              rem /= nn;
            }
            for (int i = 0; i < m; ++i) moved[piece.perm(i + 1) - 1] = digits[i];
            std::size_t out = 0;
            for (int i = 0; i < m; ++i) out = out * nn + moved[i];
            es.push_back({in, out, Rational(1)});
          }
        }
      },
      p);
  return es;
}

std::size_t nnz_estimate(const Piece& p, int n) {
  return std::visit(
      [&](const auto& piece) -> std::size_t {
        using T = std::decay_t<decltype(piece)>;
        if constexpr (std::is_same_v<T, IdPiece>) return 0;
        if constexpr (std::is_same_v<T, MatPiece> || std::is_same_v<T, CrossPiece>) return ipow(n, 2);
        if constexpr (std::is_same_v<T, CupPiece> || std::is_same_v<T, CapPiece>) return ipow(n, 1);
        if constexpr (std::is_same_v<T, VertexPiece>) {
          std::size_t f = 1;
          for (int i = 2; i <= n; ++i) f *= i;
          return f;
        }
        if constexpr (std::is_same_v<T, PermPiece>) return ipow(n, piece.perm.size());
        return 0;
      },
      p);
}

}  // namespace

EvalResult eval_layered_detailed(const LayeredDiagram& d, const Bindings& b) {
  const auto t0 = std::chrono::steady_clock::now();
  if (auto v = validate_layered(d); !v.empty()) throw DiagramError(std::move(v));
  check_bindings(matrix_names(d), d.n, b);
  const int n = d.n;
  const int k = d.input_count();
  Tensor state = Tensor::identity(n, k);
  std::size_t ops = 0;

  for (const Slice& s : d.layers) {
    int offset = 0;
    for (const Piece& p : s.pieces) {
      const int a = piece_inputs(p, n);
      const int bo = piece_outputs(p, n);
      if (std::holds_alternative<IdPiece>(p)) {
        offset += bo;
        continue;
      }
      const int w = state.out_arity();
      const int r = w - offset - a;
      const std::size_t rk = ipow(n, r + k);
      const std::size_t left_total = ipow(n, offset);
      const std::size_t in_block = ipow(n, a), out_block = ipow(n, bo);
      Tensor next(n, w - a + bo, k);
      const auto entries = piece_entries(p, n, b);
      for (std::size_t left = 0; left < left_total; ++left) {
        for (const Entry& e : entries) {
          const std::size_t src = (left * in_block + e.in) * rk;
          const std::size_t dst = (left * out_block + e.out) * rk;
          const bool unit = e.val.is_one();
          for (std::size_t rest = 0; rest < rk; ++rest) {
            const Rational& x = state.at(src + rest);
            if (x.is_zero()) continue;
            ++ops;
            if (unit)
              next.at(dst + rest) += x;
            else
              next.at(dst + rest) += e.val * x;
          }
        }
      }
      state = std::move(next);
      offset += bo;
    }
  }
  EvalResult res;
  res.tensor = std::move(state);
  res.term_count = ops;
  res.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

Tensor eval_layered(const LayeredDiagram& d, const Bindings& b) { return eval_layered_detailed(d, b).tensor; }

double layered_cost(const LayeredDiagram& d) {
  const int n = d.n;
  const int k = d.input_count();
  int w = k;
  double cost = 0;
  for (const Slice& s : d.layers) {
    int offset = 0;
    for (const Piece& p : s.pieces) {
      const int a = piece_inputs(p, n), bo = piece_outputs(p, n);
      cost += static_cast<double>(nnz_estimate(p, n)) * std::pow(n, w - a + k);
      w += bo - a;
      offset += bo;
    }
  }
  return cost;
}

}  // namespace td
