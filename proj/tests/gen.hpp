// Hand-rolled generators shared by the property tests.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "td/diagram.hpp"
#include "td/linalg.hpp"

namespace gen {

using td::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(rng_() % span);
  }
  bool coin() { return rng_() & 1; }
  std::uint64_t raw() { return rng_(); }

  Rational small_rational(int bound = 9) { return Rational(integer(-bound, bound), integer(1, bound)); }

  // Mix of small values, values near the int64 limits and big ones.
  Rational wide_rational() {
    switch (integer(0, 3)) {
      case 0: return small_rational();
      case 1: return Rational(integer(-(1LL << 62), 1LL << 62), integer(1, 1LL << 40));
      case 2: return Rational(std::numeric_limits<long long>::max() - integer(0, 5)) * (coin() ? 1 : -1);
      default: {
        Rational r = Rational(integer(1, 1LL << 60));
        return r * r * small_rational();
      }
    }
  }

  td::Matrix matrix(int rows, int cols, int bound = 9) {
    td::Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = Rational(integer(-bound, bound));
    return m;
  }
  td::Vector vector(int n, int bound = 9) {
    td::Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = Rational(integer(-bound, bound));
    return v;
  }
  std::vector<int> shuffled(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    for (int i = m - 1; i > 0; --i) std::swap(p[i], p[integer(0, i)]);
    return p;
  }

  // Random valid layered diagram over matrices "A" and "B".
  td::LayeredDiagram diagram(int n, int max_width = 5, int max_layers = 4, int max_nodes = 3);

 private:
  std::mt19937_64 rng_;
};

inline td::LayeredDiagram Gen::diagram(int n, int max_width, int max_layers, int max_nodes) {
  using namespace td;
  LayeredDiagram d{n, {}, {}};
  const int k = static_cast<int>(integer(0, std::min(3, max_width)));
  for (int i = 0; i < k; ++i) d.inputs.push_back(coin() ? Polarity::Vector : Polarity::Covector);
  std::vector<Polarity> wires = d.inputs;
  int nodes = 0;
  const int layers = static_cast<int>(integer(1, max_layers));
  for (int l = 0; l < layers; ++l) {
    Slice s;
    std::vector<Polarity> next;
    std::size_t w = 0;
    auto width_after = [&](int consumed, int produced) {
      return static_cast<int>(next.size() + (wires.size() - w)) - consumed + produced;
    };
    while (w < wires.size() || (coin() && coin() && width_after(0, 2) <= max_width)) {
      const int choice = static_cast<int>(integer(0, 9));
      // Cup: consumes nothing.
      if ((choice == 0 || w == wires.size()) && width_after(0, 2) <= max_width) {
        const bool rev = coin();
        s.pieces.push_back(CupPiece{rev});
        next.push_back(rev ? Polarity::Vector : Polarity::Covector);
        next.push_back(rev ? Polarity::Covector : Polarity::Vector);
        continue;
      }
      if (w == wires.size()) break;
      const std::size_t left = wires.size() - w;
      if (choice == 1 && left >= 2) {
        s.pieces.push_back(CrossPiece{});
        next.push_back(wires[w + 1]);
        next.push_back(wires[w]);
        w += 2;
      } else if (choice == 2 && left >= 2 && wires[w] != wires[w + 1]) {
        s.pieces.push_back(CapPiece{wires[w] == Polarity::Covector});
        w += 2;
      } else if (choice == 3 || choice == 4) {
        s.pieces.push_back(MatPiece{coin() ? "A" : "B", coin()});
        next.push_back(wires[w]);
        ++w;
      } else if (choice == 5 && nodes < max_nodes) {
        // Vertex on the next `in` wires if they share a polarity.
        const int in = static_cast<int>(integer(0, std::min<int>(n, static_cast<int>(left))));
        const Polarity p = in > 0 ? wires[w] : (coin() ? Polarity::Vector : Polarity::Covector);
        bool same = true;
        for (int i = 0; i < in; ++i) same = same && wires[w + i] == p;
        if (!same || width_after(in, n - in) > max_width) {
          s.pieces.push_back(IdPiece{});
          next.push_back(wires[w++]);
          continue;
        }
        const Direction dir = p == Polarity::Vector ? Direction::Sink : Direction::Source;
        s.pieces.push_back(VertexPiece{dir, in, shuffled(n)});
        const Polarity out = dir == Direction::Sink ? Polarity::Covector : Polarity::Vector;
        for (int i = in; i < n; ++i) next.push_back(out);
        w += in;
        ++nodes;
      } else if (choice == 6 && left >= 2) {
        const int m = static_cast<int>(integer(2, std::min<int>(3, static_cast<int>(left))));
        std::vector<int> images = shuffled(m);
        for (int& x : images) ++x;
        s.pieces.push_back(PermPiece{Permutation(images)});
        std::vector<Polarity> moved(m);
        for (int i = 0; i < m; ++i) moved[images[i] - 1] = wires[w + i];
        next.insert(next.end(), moved.begin(), moved.end());
        w += m;
      } else {
        s.pieces.push_back(IdPiece{});
        next.push_back(wires[w++]);
      }
    }
    if (s.pieces.empty()) continue;
    d.layers.push_back(std::move(s));
    wires = std::move(next);
  }
  return d;
}

}  // namespace gen
