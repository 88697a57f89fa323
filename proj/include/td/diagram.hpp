#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "td/linalg.hpp"
#include "td/permutation.hpp"

namespace td {

// Vector wires are oriented upward, covector wires downward.
enum class Polarity { Vector, Covector };
enum class Direction { Sink, Source };

const char* to_string(Polarity p);
const char* to_string(Direction d);

struct IdPiece {};
struct CrossPiece {};
// Creates two wires. Default polarity (covector, vector); reversed (vector, covector).
struct CupPiece {
  bool reversed = false;
};
// Consumes two wires. Default polarity (vector, covector); reversed (covector, vector).
struct CapPiece {
  bool reversed = false;
};
// Acts in the slicing direction: v -> Av on a vector wire, w^T -> (Aw)^T on a
// covector wire. transpose switches to the action of A^T.
struct MatPiece {
  std::string name;
  bool transpose = false;
};
// n-valent vertex with `in` lower wires and n - in upper wires. Local slots are
// lower wires left to right (0..in-1) then upper wires left to right. ciliation
// lists the slots in the order read from the cilium.
struct VertexPiece {
  Direction dir = Direction::Sink;
  int in = 0;
  std::vector<int> ciliation;
};
// Lower wire i ends at upper position perm(i).
struct PermPiece {
  Permutation perm;
};

using Piece = std::variant<IdPiece, CrossPiece, CupPiece, CapPiece, MatPiece, VertexPiece, PermPiece>;

int piece_inputs(const Piece& p, int n);
int piece_outputs(const Piece& p, int n);
std::string piece_kind(const Piece& p);

struct Slice {
  std::vector<Piece> pieces;
};

struct LayeredDiagram {
  int n = 2;
  std::vector<Polarity> inputs;
  std::vector<Slice> layers;

  int input_count() const { return static_cast<int>(inputs.size()); }
  // Propagated output polarities. Throws DiagramError when invalid.
  std::vector<Polarity> outputs() const;
  int output_count() const { return static_cast<int>(outputs().size()); }
};

// Cilium on the left of the vertex, slots read counterclockwise: lower wires
// left to right, then upper wires right to left.
std::vector<int> left_ciliation(int in, int n);

Slice id_slice(int wires);

using Bindings = std::map<std::string, Matrix, std::less<>>;

struct Violation {
  std::string kind;
  std::string message;
  int layer = 0;  // 1-based layer, 0 when not layer specific
  std::string str() const;
};

class DiagramError : public std::runtime_error {
 public:
  explicit DiagramError(std::vector<Violation> v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class BindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Violation> validate_layered(const LayeredDiagram& d);

// `top` is stacked above `bottom`; bottom's outputs must match top's inputs.
LayeredDiagram compose_vertical(const LayeredDiagram& top, const LayeredDiagram& bottom);
// Tensor product, left factor first. Shorter diagrams are padded with identities.
LayeredDiagram juxtapose_horizontal(const LayeredDiagram& left, const LayeredDiagram& right);
// Rewrites every Perm piece as layers of adjacent crossings.
LayeredDiagram expand_perms(const LayeredDiagram& d);

std::set<std::string> matrix_names(const LayeredDiagram& d);
void check_bindings(const std::set<std::string>& names, int n, const Bindings& b);

// ---- graph form ----

enum class VertexKind { Input, Output, Node };

struct EndRef {
  int edge = -1;
  bool head = false;
  friend bool operator==(const EndRef&, const EndRef&) = default;
};

struct GraphVertex {
  VertexKind kind = VertexKind::Node;
  int position = 0;  // 1-based, inputs and outputs only
  Direction dir = Direction::Sink;
  // Nodes: incident ends in ciliation order. Inputs/outputs: their single end.
  std::vector<EndRef> ends;
};

struct EdgeLabel {
  std::string name;
  bool transposed = false;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

// Labels are listed from tail to head; the one nearest the tail acts first.
// A closed loop has no endpoints (tail = head = -1).
struct Edge {
  int tail = -1;
  int head = -1;
  std::vector<EdgeLabel> labels;
  bool is_loop() const { return tail < 0 && head < 0; }
};

struct Diagram {
  int n = 2;
  std::vector<GraphVertex> vertices;
  std::vector<Edge> edges;

  int input_count() const;
  int output_count() const;
};

std::vector<Violation> validate_graph(const Diagram& g);
Diagram to_graph(const LayeredDiagram& d);
std::set<std::string> matrix_names(const Diagram& g);

// Product of the labels along the edge, first-applied factor rightmost.
Matrix edge_matrix(const Edge& e, int n, const Bindings& b);

}  // namespace td
