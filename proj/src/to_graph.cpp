#include <optional>

#include "td/diagram.hpp"

namespace td {

namespace {

// Every wire at every level is a segment with a lower and an upper side. Pieces
// link segment sides to each other or to terminals (vertex slots, inputs,
// outputs). Tracing the links recovers the edges.
enum class Side { Lower, Upper };

struct Link {
  enum class Kind { None, Segment, Terminal } kind = Kind::None;
  int target = -1;  // segment id or terminal id
  Side target_side = Side::Lower;
  std::optional<EdgeLabel> label;
};

struct Segment {
  Polarity polarity = Polarity::Vector;
  Link lower, upper;
  bool visited = false;
};

struct Terminal {
  int vertex = -1;
  int slot = 0;
  int segment = -1;
  Side side = Side::Lower;  // side of the segment the terminal attaches to
  bool used = false;
};

Side opposite(Side s) { return s == Side::Lower ? Side::Upper : Side::Lower; }

}  // namespace

Diagram to_graph(const LayeredDiagram& d) {
  if (auto v = validate_layered(d); !v.empty()) throw DiagramError(std::move(v));
  const int n = d.n;
  Diagram g;
  g.n = n;

  std::vector<Segment> segs;
  std::vector<Terminal> terms;
  std::vector<std::vector<Polarity>> levels{d.inputs};
  std::vector<std::vector<int>> level_ids;

  auto make_level = [&](const std::vector<Polarity>& pol) {
    std::vector<int> ids;
    for (Polarity p : pol) {
      ids.push_back(static_cast<int>(segs.size()));
      segs.push_back(Segment{p, {}, {}, false});
    }
    level_ids.push_back(std::move(ids));
  };
  auto side_ref = [&](int seg, Side s) -> Link& { return s == Side::Lower ? segs[seg].lower : segs[seg].upper; };
  auto join = [&](int a, Side sa, int b, Side sb, std::optional<EdgeLabel> label) {
    side_ref(a, sa) = Link{Link::Kind::Segment, b, sb, label};
    side_ref(b, sb) = Link{Link::Kind::Segment, a, sa, label};
  };
  auto attach = [&](int vertex, int slot, int seg, Side s) {
    int t = static_cast<int>(terms.size());
    terms.push_back(Terminal{vertex, slot, seg, s, false});
    side_ref(seg, s) = Link{Link::Kind::Terminal, t, Side::Lower, std::nullopt};
  };

  make_level(d.inputs);
  for (int i = 0; i < d.input_count(); ++i) {
    g.vertices.push_back(GraphVertex{VertexKind::Input, i + 1, Direction::Sink, {}});
    attach(static_cast<int>(g.vertices.size()) - 1, 0, level_ids[0][i], Side::Lower);
  }

  // Node vertices are created in slice order; outputs are appended at the end
  // and then moved in front of the nodes to keep inputs, outputs, nodes order.
  std::vector<GraphVertex> nodes;
  std::vector<std::vector<int>> node_ciliation;
  struct PendingSlot {
    int node;
    int slot;
    int seg;
    Side side;
  };
  std::vector<PendingSlot> node_slots;

  std::vector<Polarity> wires = d.inputs;
  for (const Slice& s : d.layers) {
    // Upper-level polarities.
    LayeredDiagram one{n, wires, {s}};
    std::vector<Polarity> next = one.outputs();
    const std::vector<int> below = level_ids.back();
    make_level(next);
    const std::vector<int>& above = level_ids.back();
    int lo = 0, up = 0;
    for (const Piece& p : s.pieces) {
      std::visit(
          [&](const auto& piece) {
            using T = std::decay_t<decltype(piece)>;
            if constexpr (std::is_same_v<T, IdPiece>) {
              join(below[lo], Side::Upper, above[up], Side::Lower, std::nullopt);
            } else if constexpr (std::is_same_v<T, MatPiece>) {
              const bool cov = wires[lo] == Polarity::Covector;
              join(below[lo], Side::Upper, above[up], Side::Lower, EdgeLabel{piece.name, piece.transpose != cov});
            } else if constexpr (std::is_same_v<T, CrossPiece>) {
              join(below[lo], Side::Upper, above[up + 1], Side::Lower, std::nullopt);
              join(below[lo + 1], Side::Upper, above[up], Side::Lower, std::nullopt);
            } else if constexpr (std::is_same_v<T, PermPiece>) {
              for (int i = 1; i <= piece.perm.size(); ++i)
                join(below[lo + i - 1], Side::Upper, above[up + piece.perm(i) - 1], Side::Lower, std::nullopt);
            } else if constexpr (std::is_same_v<T, CupPiece>) {
              join(above[up], Side::Lower, above[up + 1], Side::Lower, std::nullopt);
            } else if constexpr (std::is_same_v<T, CapPiece>) {
              join(below[lo], Side::Upper, below[lo + 1], Side::Upper, std::nullopt);
            } else if constexpr (std::is_same_v<T, VertexPiece>) {
              const int node = static_cast<int>(nodes.size());
              nodes.push_back(GraphVertex{VertexKind::Node, 0, piece.dir, {}});
              node_ciliation.push_back(piece.ciliation);
              for (int i = 0; i < piece.in; ++i) node_slots.push_back({node, i, below[lo + i], Side::Upper});
              for (int i = piece.in; i < n; ++i)
                node_slots.push_back({node, i, above[up + i - piece.in], Side::Lower});
            }
          },
          p);
      lo += piece_inputs(p, n);
      up += piece_outputs(p, n);
    }
    wires = std::move(next);
  }

  const int k = d.input_count();
  const int l = static_cast<int>(wires.size());
  for (int i = 0; i < l; ++i) {
    g.vertices.push_back(GraphVertex{VertexKind::Output, i + 1, Direction::Sink, {}});
    attach(k + i, 0, level_ids.back()[i], Side::Upper);
  }
  const int node_base = k + l;
  for (auto& v : nodes) g.vertices.push_back(std::move(v));
  for (const auto& ps : node_slots) attach(node_base + ps.node, ps.slot, ps.seg, ps.side);

  // Per node: end at each local slot.
  std::vector<std::vector<EndRef>> slot_end(nodes.size(), std::vector<EndRef>(n));
  auto record_end = [&](const Terminal& t, EndRef r) {
    const int v = t.vertex;
    if (g.vertices[v].kind == VertexKind::Node)
      slot_end[v - node_base][t.slot] = r;
    else
      g.vertices[v].ends = {r};
  };

  // Upward travel along a vector segment follows the orientation.
  auto along = [&](int seg, Side entered) {
    const bool upward = entered == Side::Lower;
    return upward == (segs[seg].polarity == Polarity::Vector);
  };

  for (std::size_t ti = 0; ti < terms.size(); ++ti) {
    if (terms[ti].used) continue;
    Terminal& start = terms[ti];
    start.used = true;
    int seg = start.segment;
    Side entered = start.side;
    const bool forward = along(seg, entered);
    std::vector<EdgeLabel> labels;
    int end_term = -1;
    while (true) {
      segs[seg].visited = true;
      const Link& out = side_ref(seg, opposite(entered));
      if (out.kind == Link::Kind::Terminal) {
        end_term = out.target;
        break;
      }
      if (out.label) labels.push_back(*out.label);
      seg = out.target;
      entered = out.target_side;
    }
    terms[end_term].used = true;
    Edge e;
    const int eid = static_cast<int>(g.edges.size());
    if (forward) {
      e.tail = start.vertex;
      e.head = terms[end_term].vertex;
      e.labels = std::move(labels);
      record_end(start, {eid, false});
      record_end(terms[end_term], {eid, true});
    } else {
      e.tail = terms[end_term].vertex;
      e.head = start.vertex;
      e.labels.assign(labels.rbegin(), labels.rend());
      record_end(terms[end_term], {eid, false});
      record_end(start, {eid, true});
    }
    g.edges.push_back(std::move(e));
  }

  // Whatever is left forms closed loops.
  for (std::size_t si = 0; si < segs.size(); ++si) {
    if (segs[si].visited) continue;
    int seg = static_cast<int>(si);
    Side entered = Side::Lower;
    const bool forward = along(seg, entered);
    std::vector<EdgeLabel> labels;
    while (!segs[seg].visited) {
      segs[seg].visited = true;
      const Link& out = side_ref(seg, opposite(entered));
      if (out.label) labels.push_back(*out.label);
      seg = out.target;
      entered = out.target_side;
    }
    Edge e;
    if (forward)
      e.labels = std::move(labels);
    else
      e.labels.assign(labels.rbegin(), labels.rend());
    g.edges.push_back(std::move(e));
  }

  for (std::size_t v = 0; v < nodes.size(); ++v) {
    auto& ends = g.vertices[node_base + v].ends;
    for (int slot : node_ciliation[v]) ends.push_back(slot_end[v][slot]);
  }
  return g;
}

}  // namespace td
