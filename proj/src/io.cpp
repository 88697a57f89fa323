#include "td/io.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace td {

using json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& msg, int line, int column, std::string where)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg
                         : where.empty() ? msg
                                         : where + ": " + msg),
      line_(line),
      column_(column),
      where_(std::move(where)) {}

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) { throw ParseError(msg, 0, 0, where); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Position of the offending byte.
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, col);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) schema(where, "unexpected field '" + k + "'");
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema(where, "expected an integer");
  return v.get<int>();
}

bool bool_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) schema(where + "." + key, "expected true or false");
  return it->get<bool>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_field(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Rational rational_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) schema(where, "floating-point entries are not allowed; write \"p/q\"");
  if (!v.is_string()) schema(where, "expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    schema(where, e.what());
  }
}

Matrix matrix_value(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) schema(where, "expected a non-empty array of rows");
  const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
  Matrix m(v.size(), cols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) schema(w, "expected a row array");
    if (v[i].size() != cols) schema(w, "row has " + std::to_string(v[i].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational_value(v[i][j], w + "[" + std::to_string(j) + "]");
  }
  return m;
}

Polarity polarity_value(const json& v, const std::string& where) {
  if (v == "vector") return Polarity::Vector;
  if (v == "covector") return Polarity::Covector;
  schema(where, "expected \"vector\" or \"covector\"");
}

Piece piece_value(const json& p, const std::string& where, int n) {
  if (!p.is_object()) schema(where, "expected a piece object");
  const std::string kind = string_field(p, "kind", where);
  if (kind == "id" || kind == "cross") {
    only_keys(p, {"kind"}, where);
    if (kind == "id") return IdPiece{};
    return CrossPiece{};
  }
  if (kind == "cup" || kind == "cap") {
    only_keys(p, {"kind", "reversed"}, where);
    const bool r = bool_field(p, "reversed", where);
    if (kind == "cup") return CupPiece{r};
    return CapPiece{r};
  }
  if (kind == "mat") {
    only_keys(p, {"kind", "name", "transpose"}, where);
    return MatPiece{string_field(p, "name", where), bool_field(p, "transpose", where)};
  }
  if (kind == "vertex") {
    only_keys(p, {"kind", "dir", "in", "ciliation"}, where);
    VertexPiece v;
    const std::string dir = string_field(p, "dir", where);
    if (dir == "sink")
      v.dir = Direction::Sink;
    else if (dir == "source")
      v.dir = Direction::Source;
    else
      schema(where + ".dir", "expected \"sink\" or \"source\"");
    v.in = int_field(field(p, "in", where), where + ".in");
    if (v.in < 0 || v.in > n) schema(where + ".in", "must lie in 0.." + std::to_string(n));
    if (p.contains("ciliation")) {
      for (int s : int_list(p["ciliation"], where + ".ciliation")) v.ciliation.push_back(s - 1);
    } else {
      v.ciliation = left_ciliation(v.in, n);
    }
    return v;
  }
  if (kind == "perm") {
    only_keys(p, {"kind", "images"}, where);
    try {
      return PermPiece{Permutation(int_list(field(p, "images", where), where + ".images"))};
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      schema(where + ".images", e.what());
    }
  }
  schema(where + ".kind", "unknown piece kind '" + kind + "'");
}

json piece_json(const Piece& p) {
  json j;
  std::visit(
      [&](const auto& piece) {
        using T = std::decay_t<decltype(piece)>;
        if constexpr (std::is_same_v<T, IdPiece>) {
          j["kind"] = "id";
        } else if constexpr (std::is_same_v<T, CrossPiece>) {
          j["kind"] = "cross";
        } else if constexpr (std::is_same_v<T, CupPiece> || std::is_same_v<T, CapPiece>) {
          j["kind"] = std::is_same_v<T, CupPiece> ? "cup" : "cap";
          if (piece.reversed) j["reversed"] = true;
        } else if constexpr (std::is_same_v<T, MatPiece>) {
          j["kind"] = "mat";
          j["name"] = piece.name;
          if (piece.transpose) j["transpose"] = true;
        } else if constexpr (std::is_same_v<T, VertexPiece>) {
          j["kind"] = "vertex";
          j["dir"] = to_string(piece.dir);
          j["in"] = piece.in;
          json cil = json::array();
          for (int s : piece.ciliation) cil.push_back(s + 1);
          j["ciliation"] = cil;
        } else if constexpr (std::is_same_v<T, PermPiece>) {
          j["kind"] = "perm";
          j["images"] = piece.perm.images();
        }
      },
      p);
  return j;
}

json matrix_json(const Matrix& m) { return matrix_strings(m); }

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

std::string vector_str(const Vector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + v(i).str();
  return s + "]";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string edge_text(const Edge& e) {
  std::string s;
  for (const auto& l : e.labels) {
    if (!s.empty()) s += " ";
    s += l.name + (l.transposed ? "^T" : "");
  }
  return s;
}

std::string elapsed_ms(std::chrono::nanoseconds ns) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(3);
  ss << static_cast<double>(ns.count()) / 1e6;
  return ss.str();
}

}  // namespace

DiagramFile parse_diagram_file(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema("document", "expected a JSON object");
  only_keys(doc, {"n", "matrices", "inputs", "layers"}, "document");
  DiagramFile f;
  f.diagram.n = int_field(field(doc, "n", "document"), "n");
  if (f.diagram.n < 1) schema("n", "must be at least 1");
  if (doc.contains("matrices")) {
    const json& ms = doc["matrices"];
    if (!ms.is_object()) schema("matrices", "expected an object of named matrices");
    for (const auto& [name, m] : ms.items()) f.matrices[name] = matrix_value(m, "matrices." + name);
  }
  if (doc.contains("inputs")) {
    const json& in = doc["inputs"];
    if (!in.is_array()) schema("inputs", "expected an array of polarities");
    for (std::size_t i = 0; i < in.size(); ++i)
      f.diagram.inputs.push_back(polarity_value(in[i], "inputs[" + std::to_string(i) + "]"));
  }
  const json& layers = field(doc, "layers", "document");
  if (!layers.is_array()) schema("layers", "expected an array of slices");
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const std::string where = "layers[" + std::to_string(l) + "]";
    const json& s = layers[l];
    if (!s.is_object()) schema(where, "expected a slice object");
    only_keys(s, {"pieces"}, where);
    const json& pieces = field(s, "pieces", where);
    if (!pieces.is_array()) schema(where + ".pieces", "expected an array of pieces");
    Slice slice;
    for (std::size_t p = 0; p < pieces.size(); ++p)
      slice.pieces.push_back(piece_value(pieces[p], where + ".pieces[" + std::to_string(p) + "]", f.diagram.n));
    f.diagram.layers.push_back(std::move(slice));
  }
  if (auto v = validate_layered(f.diagram); !v.empty()) throw DiagramError(std::move(v));
  return f;
}

DiagramFile load_diagram_file(const std::string& path) { return parse_diagram_file(read_file(path)); }

std::string print_diagram_file(const LayeredDiagram& d, const Bindings& matrices) {
  std::ostringstream os;
  os << "{\n  \"n\": " << d.n << ",\n";
  if (!matrices.empty()) {
    os << "  \"matrices\": {";
    bool first = true;
    for (const auto& [name, m] : matrices) {
      os << (first ? "\n" : ",\n") << "    " << json(name).dump() << ": " << matrix_json(m).dump();
      first = false;
    }
    os << "\n  },\n";
  }
  json in = json::array();
  for (Polarity p : d.inputs) in.push_back(to_string(p));
  os << "  \"inputs\": " << in.dump() << ",\n  \"layers\": [";
  for (std::size_t l = 0; l < d.layers.size(); ++l) {
    json pieces = json::array();
    for (const Piece& p : d.layers[l].pieces) pieces.push_back(piece_json(p));
    os << (l ? ",\n" : "\n") << "    " << json{{"pieces", pieces}}.dump();
  }
  os << (d.layers.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

Matrix parse_matrix_text(std::string_view text) { return matrix_value(parse_json(text), "matrix"); }

Matrix load_matrix_file(const std::string& path) { return parse_matrix_text(read_file(path)); }

std::string to_dot(const Diagram& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=BT;\n";
  auto vid = [&](int v) {
    const GraphVertex& x = g.vertices[v];
    switch (x.kind) {
      case VertexKind::Input: return "in" + std::to_string(x.position);
      case VertexKind::Output: return "out" + std::to_string(x.position);
      case VertexKind::Node: break;
    }
    return "v" + std::to_string(v);
  };
  // Ciliation position of each edge end at a node.
  std::map<std::pair<int, bool>, int> port;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const GraphVertex& x = g.vertices[v];
    if (x.kind == VertexKind::Node)
      for (std::size_t i = 0; i < x.ends.size(); ++i) port[{x.ends[i].edge, x.ends[i].head}] = static_cast<int>(i) + 1;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const GraphVertex& x = g.vertices[v];
    os << "  " << vid(static_cast<int>(v));
    if (x.kind == VertexKind::Node)
      os << " [shape=circle, label=\"" << to_string(x.dir) << "\"];\n";
    else
      os << " [shape=plaintext, label=\"" << (x.kind == VertexKind::Input ? "in " : "out ") << x.position << "\"];\n";
  }
  int loops = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& edge = g.edges[e];
    std::string attrs = "label=\"" + dot_escape(edge_text(edge)) + "\"";
    if (edge.is_loop()) {
      const std::string id = "loop" + std::to_string(++loops);
      os << "  " << id << " [shape=point, label=\"\"];\n";
      os << "  " << id << " -> " << id << " [" << attrs << "];\n";
      continue;
    }
    if (auto it = port.find({static_cast<int>(e), false}); it != port.end())
      attrs += ", taillabel=\"" + std::to_string(it->second) + "\"";
    if (auto it = port.find({static_cast<int>(e), true}); it != port.end())
      attrs += ", headlabel=\"" + std::to_string(it->second) + "\"";
    os << "  " << vid(edge.tail) << " -> " << vid(edge.head) << " [" << attrs << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string report_text(const IdentityReport& r, bool timing) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.id << " n=" << r.n << " trials=" << r.trials << " seed=" << r.seed;
  if (timing) os << " time=" << elapsed_ms(r.elapsed) << "ms";
  os << "\n";
  if (r.failure) {
    os << "  trial " << r.failure->trial << ": " << r.failure->message << "\n";
    for (const auto& [name, m] : r.failure->matrices) os << "  " << name << " = " << matrix_str(m) << "\n";
    for (const auto& [name, v] : r.failure->vectors) os << "  " << name << " = " << vector_str(v) << "\n";
  }
  return os.str();
}

std::string report_json(const IdentityReport& r, bool timing) {
  json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["outcome"] = r.passed() ? "pass" : "fail";
  if (r.failure) {
    json f;
    f["trial"] = r.failure->trial;
    f["message"] = r.failure->message;
    json ms = json::object(), vs = json::object();
    for (const auto& [name, m] : r.failure->matrices) ms[name] = matrix_json(m);
    for (const auto& [name, v] : r.failure->vectors) vs[name] = vector_json(v);
    f["matrices"] = ms;
    f["vectors"] = vs;
    j["failure"] = f;
  }
  if (timing) j["elapsed_ms"] = static_cast<double>(r.elapsed.count()) / 1e6;
  return j.dump();
}

}  // namespace td
