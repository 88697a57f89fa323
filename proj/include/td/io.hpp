#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "td/diagram.hpp"
#include "td/identities.hpp"

namespace td {

// Syntax errors carry a 1-based line and column; schema errors carry the
// location inside the document (e.g. "layers[2].pieces[0]") and line 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column, std::string where = {});
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& where() const { return where_; }

 private:
  int line_;
  int column_;
  std::string where_;
};

struct DiagramFile {
  LayeredDiagram diagram;
  Bindings matrices;
};

// {"n": 2, "matrices": {"A": [["2","3"],["4","5"]]}, "inputs": ["vector"],
//  "layers": [{"pieces": [{"kind": "mat", "name": "A"}]}]}
// Vertex ciliations and perm images are 1-based in the file. Throws ParseError,
// or DiagramError when the diagram itself is invalid.
DiagramFile parse_diagram_file(std::string_view text);
DiagramFile load_diagram_file(const std::string& path);
std::string print_diagram_file(const LayeredDiagram& d, const Bindings& matrices = {});

// JSON array of rows; entries are "p/q" strings or integers.
Matrix parse_matrix_text(std::string_view text);
Matrix load_matrix_file(const std::string& path);

std::string to_dot(const Diagram& g, const std::string& name = "diagram");

std::string report_text(const IdentityReport& r, bool timing);
// One JSON object on a single line.
std::string report_json(const IdentityReport& r, bool timing);

}  // namespace td
