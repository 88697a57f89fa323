#include "td/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace td {

const char* to_string(Polarity p) { return p == Polarity::Vector ? "vector" : "covector"; }
const char* to_string(Direction d) { return d == Direction::Sink ? "sink" : "source"; }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

int piece_inputs(const Piece& p, int /*n*/) {
  return std::visit(overloaded{[](const IdPiece&) { return 1; }, [](const CrossPiece&) { return 2; },
                               [](const CupPiece&) { return 0; }, [](const CapPiece&) { return 2; },
                               [](const MatPiece&) { return 1; }, [](const VertexPiece& v) { return v.in; },
                               [](const PermPiece& q) { return q.perm.size(); }},
                    p);
}

int piece_outputs(const Piece& p, int n) {
  return std::visit(overloaded{[](const IdPiece&) { return 1; }, [](const CrossPiece&) { return 2; },
                               [](const CupPiece&) { return 2; }, [](const CapPiece&) { return 0; },
                               [](const MatPiece&) { return 1; },
                               [n](const VertexPiece& v) { return n - v.in; },
                               [](const PermPiece& q) { return q.perm.size(); }},
                    p);
}

std::string piece_kind(const Piece& p) {
  return std::visit(overloaded{[](const IdPiece&) { return "id"; }, [](const CrossPiece&) { return "cross"; },
                               [](const CupPiece&) { return "cup"; }, [](const CapPiece&) { return "cap"; },
                               [](const MatPiece&) { return "mat"; }, [](const VertexPiece&) { return "vertex"; },
                               [](const PermPiece&) { return "perm"; }},
                    p);
}

std::vector<int> left_ciliation(int in, int n) {
  std::vector<int> c(in);
  std::iota(c.begin(), c.end(), 0);
  for (int s = n - 1; s >= in; --s) c.push_back(s);
  return c;
}

Slice id_slice(int wires) { return Slice{std::vector<Piece>(wires, IdPiece{})}; }

std::string Violation::str() const {
  std::string s = layer > 0 ? "layer " + std::to_string(layer) + ": " : "";
  return s + kind + ": " + message;
}

static std::string join_violations(const std::vector<Violation>& v) {
  std::string s = "invalid diagram";
  for (const auto& x : v) s += "\n  " + x.str();
  return s;
}

DiagramError::DiagramError(std::vector<Violation> v)
    : std::runtime_error(join_violations(v)), violations_(std::move(v)) {}

namespace {

// Walks the slices, recording violations; returns the final polarities.
std::vector<Polarity> propagate(const LayeredDiagram& d, std::vector<Violation>& out) {
  const int n = d.n;
  std::vector<Polarity> wires = d.inputs;
  if (n < 1) {
    out.push_back({"dimension", "n must be at least 1, got " + std::to_string(n), 0});
    return wires;
  }
  for (std::size_t li = 0; li < d.layers.size(); ++li) {
    const int layer = static_cast<int>(li) + 1;
    const Slice& s = d.layers[li];
    int consumed = 0;
    for (const auto& p : s.pieces) {
      if (const auto* v = std::get_if<VertexPiece>(&p); v && (v->in < 0 || v->in > n)) {
        out.push_back({"arity", "vertex lower wire count " + std::to_string(v->in) + " outside 0.." + std::to_string(n), layer});
        return wires;
      }
      consumed += piece_inputs(p, n);
    }
    if (consumed != static_cast<int>(wires.size())) {
      out.push_back({"wire count",
                     std::to_string(wires.size()) + " vs " + std::to_string(consumed) + " (" +
                         std::to_string(wires.size()) + " wire(s) present, pieces consume " +
                         std::to_string(consumed) + ")",
                     layer});
      return wires;
    }
    std::vector<Polarity> next;
    std::size_t pos = 0;
    for (std::size_t pi = 0; pi < s.pieces.size(); ++pi) {
      const Piece& p = s.pieces[pi];
      const std::string where = "piece " + std::to_string(pi + 1) + " (" + piece_kind(p) + ")";
      auto bad = [&](const std::string& kind, const std::string& msg) {
        out.push_back({kind, where + ": " + msg, layer});
      };
      auto want = [&](std::size_t at, Polarity pol) {
        if (wires[at] != pol)
          bad("polarity", "wire " + std::to_string(at + 1) + " is a " + to_string(wires[at]) + ", expected a " +
                              to_string(pol));
      };
      std::visit(overloaded{
                     [&](const IdPiece&) { next.push_back(wires[pos]); },
                     [&](const MatPiece& m) {
                       if (m.name.empty()) bad("label", "matrix name is empty");
                       next.push_back(wires[pos]);
                     },
                     [&](const CrossPiece&) {
                       next.push_back(wires[pos + 1]);
                       next.push_back(wires[pos]);
                     },
                     [&](const CupPiece& c) {
                       if (c.reversed) {
                         next.push_back(Polarity::Vector);
                         next.push_back(Polarity::Covector);
                       } else {
                         next.push_back(Polarity::Covector);
                         next.push_back(Polarity::Vector);
                       }
                     },
                     [&](const CapPiece& c) {
                       want(pos, c.reversed ? Polarity::Covector : Polarity::Vector);
                       want(pos + 1, c.reversed ? Polarity::Vector : Polarity::Covector);
                     },
                     [&](const VertexPiece& v) {
                       std::vector<int> sorted = v.ciliation;
                       std::sort(sorted.begin(), sorted.end());
                       std::vector<int> expect(n);
                       std::iota(expect.begin(), expect.end(), 0);
                       if (sorted != expect)
                         bad("ciliation", "ciliation must list each of the " + std::to_string(n) +
                                              " slots exactly once");
                       const Polarity lower = v.dir == Direction::Sink ? Polarity::Vector : Polarity::Covector;
                       for (int i = 0; i < v.in; ++i) {
                         if (wires[pos + i] != lower)
                           bad("sink/source", std::string(to_string(v.dir)) + " needs " + to_string(lower) +
                                                  " wires below, wire " + std::to_string(pos + i + 1) +
                                                  " is a " + to_string(wires[pos + i]));
                       }
                       const Polarity upper = v.dir == Direction::Sink ? Polarity::Covector : Polarity::Vector;
                       for (int i = v.in; i < n; ++i) next.push_back(upper);
                     },
                     [&](const PermPiece& q) {
                       const int m = q.perm.size();
                       std::vector<Polarity> block(m);
                       for (int i = 1; i <= m; ++i) block[q.perm(i) - 1] = wires[pos + i - 1];
                       next.insert(next.end(), block.begin(), block.end());
                     },
                 },
                 p);
      pos += piece_inputs(p, n);
    }
    wires = std::move(next);
  }
  return wires;
}

}  // namespace

std::vector<Violation> validate_layered(const LayeredDiagram& d) {
  std::vector<Violation> v;
  propagate(d, v);
  return v;
}

std::vector<Polarity> LayeredDiagram::outputs() const {
  std::vector<Violation> v;
  auto out = propagate(*this, v);
  if (!v.empty()) throw DiagramError(std::move(v));
  return out;
}

LayeredDiagram compose_vertical(const LayeredDiagram& top, const LayeredDiagram& bottom) {
  if (top.n != bottom.n)
    throw DiagramError({{"dimension", "cannot compose diagrams over different dimensions", 0}});
  auto mid = bottom.outputs();
  top.outputs();
  if (mid != top.inputs)
    throw DiagramError({{"boundary",
                         "bottom has " + std::to_string(mid.size()) + " output wire(s), top expects " +
                             std::to_string(top.inputs.size()) + " input wire(s) of matching polarity",
                         0}});
  LayeredDiagram r{bottom.n, bottom.inputs, bottom.layers};
  r.layers.insert(r.layers.end(), top.layers.begin(), top.layers.end());
  return r;
}

LayeredDiagram juxtapose_horizontal(const LayeredDiagram& left, const LayeredDiagram& right) {
  if (left.n != right.n)
    throw DiagramError({{"dimension", "cannot juxtapose diagrams over different dimensions", 0}});
  const int lw = left.output_count();
  const int rw = right.output_count();
  LayeredDiagram r{left.n, left.inputs, {}};
  r.inputs.insert(r.inputs.end(), right.inputs.begin(), right.inputs.end());
  const std::size_t depth = std::max(left.layers.size(), right.layers.size());
  for (std::size_t i = 0; i < depth; ++i) {
    Slice s = i < left.layers.size() ? left.layers[i] : id_slice(lw);
    const Slice& t = i < right.layers.size() ? right.layers[i] : id_slice(rw);
    s.pieces.insert(s.pieces.end(), t.pieces.begin(), t.pieces.end());
    r.layers.push_back(std::move(s));
  }
  return r;
}

LayeredDiagram expand_perms(const LayeredDiagram& d) {
  d.outputs();
  LayeredDiagram r{d.n, d.inputs, {}};
  for (const Slice& s : d.layers) {
    Slice first;
    struct Block {
      int offset;
      Permutation perm;
    };
    std::vector<Block> blocks;
    int upper = 0;
    for (const Piece& p : s.pieces) {
      if (const auto* q = std::get_if<PermPiece>(&p)) {
        blocks.push_back({upper, q->perm});
        for (int i = 0; i < q->perm.size(); ++i) first.pieces.push_back(IdPiece{});
      } else {
        first.pieces.push_back(p);
      }
      upper += piece_outputs(p, d.n);
    }
    r.layers.push_back(std::move(first));
    for (const Block& b : blocks) {
      std::vector<int> dest = b.perm.images();
      for (bool swapped = true; swapped;) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < dest.size(); ++i) {
          if (dest[i] <= dest[i + 1]) continue;
          std::swap(dest[i], dest[i + 1]);
          Slice c = id_slice(b.offset + static_cast<int>(i));
          c.pieces.push_back(CrossPiece{});
          for (int k = b.offset + static_cast<int>(i) + 2; k < upper; ++k) c.pieces.push_back(IdPiece{});
          r.layers.push_back(std::move(c));
          swapped = true;
        }
      }
    }
  }
  return r;
}

std::set<std::string> matrix_names(const LayeredDiagram& d) {
  std::set<std::string> names;
  for (const auto& s : d.layers)
    for (const auto& p : s.pieces)
      if (const auto* m = std::get_if<MatPiece>(&p)) names.insert(m->name);
  return names;
}

std::set<std::string> matrix_names(const Diagram& g) {
  std::set<std::string> names;
  for (const auto& e : g.edges)
    for (const auto& l : e.labels) names.insert(l.name);
  return names;
}

void check_bindings(const std::set<std::string>& names, int n, const Bindings& b) {
  for (const auto& name : names) {
    auto it = b.find(name);
    if (it == b.end()) throw BindingError("matrix '" + name + "' is not bound");
    if (it->second.rows() != n || it->second.cols() != n)
      throw BindingError("matrix '" + name + "' is " + std::to_string(it->second.rows()) + "x" +
                         std::to_string(it->second.cols()) + ", expected " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
}

Matrix edge_matrix(const Edge& e, int n, const Bindings& b) {
  Matrix m = Matrix::Identity(n, n);
  for (const auto& l : e.labels) {
    auto it = b.find(l.name);
    if (it == b.end()) throw BindingError("matrix '" + l.name + "' is not bound");
    if (l.transposed)
      m = (it->second.transpose() * m).eval();
    else
      m = (it->second * m).eval();
  }
  return m;
}

int Diagram::input_count() const {
  int k = 0;
  for (const auto& v : vertices) k += v.kind == VertexKind::Input;
  return k;
}

int Diagram::output_count() const {
  int k = 0;
  for (const auto& v : vertices) k += v.kind == VertexKind::Output;
  return k;
}

std::vector<Violation> validate_graph(const Diagram& g) {
  std::vector<Violation> out;
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());
  // Ends each vertex actually owns, from the edge list.
  std::vector<std::vector<EndRef>> incident(nv);
  for (int e = 0; e < ne; ++e) {
    const Edge& edge = g.edges[e];
    if (edge.is_loop()) continue;
    if (edge.tail < 0 || edge.head < 0 || edge.tail >= nv || edge.head >= nv) {
      out.push_back({"edge", "edge " + std::to_string(e) + " has a missing or invalid endpoint", 0});
      continue;
    }
    incident[edge.tail].push_back({e, false});
    incident[edge.head].push_back({e, true});
  }
  std::vector<int> in_pos, out_pos;
  for (int v = 0; v < nv; ++v) {
    const GraphVertex& x = g.vertices[v];
    const std::string name = "vertex " + std::to_string(v);
    const int deg = static_cast<int>(incident[v].size());
    if (x.kind == VertexKind::Node) {
      if (deg != g.n)
        out.push_back({"degree", name + " has degree " + std::to_string(deg) + ", expected " + std::to_string(g.n), 0});
      for (const EndRef& r : incident[v]) {
        if (x.dir == Direction::Sink && !r.head) {
          out.push_back({"sink/source", name + " is a sink but edge " + std::to_string(r.edge) + " leaves it", 0});
          break;
        }
        if (x.dir == Direction::Source && r.head) {
          out.push_back({"sink/source", name + " is a source but edge " + std::to_string(r.edge) + " enters it", 0});
          break;
        }
      }
    } else {
      if (deg != 1)
        out.push_back({"degree", name + " (boundary) has degree " + std::to_string(deg) + ", expected 1", 0});
      (x.kind == VertexKind::Input ? in_pos : out_pos).push_back(x.position);
    }
    auto listed = x.ends;
    auto actual = incident[v];
    auto key = [](const EndRef& r) { return std::pair(r.edge, r.head); };
    auto less = [&](const EndRef& a, const EndRef& b) { return key(a) < key(b); };
    std::sort(listed.begin(), listed.end(), less);
    std::sort(actual.begin(), actual.end(), less);
    if (listed != actual)
      out.push_back({"ciliation", name + " must list each incident edge-end exactly once", 0});
  }
  for (auto* pos : {&in_pos, &out_pos}) {
    std::sort(pos->begin(), pos->end());
    for (std::size_t i = 0; i < pos->size(); ++i) {
      if ((*pos)[i] != static_cast<int>(i) + 1) {
        out.push_back({"position", std::string(pos == &in_pos ? "input" : "output") +
                                       " positions must be exactly 1.." + std::to_string(pos->size()),
                       0});
        break;
      }
    }
  }
  return out;
}

}  // namespace td
