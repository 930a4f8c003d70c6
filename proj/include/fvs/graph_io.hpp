#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvs/graph.hpp"

namespace fvs {

// Text format, one instance per file:
//
//   # free-form comment lines (anywhere)
//   n <count> [tournament]
//   w <w0> <w1> ... <w(n-1)>
//   a <u> <v>                 one line per arc
//   S <v> ...                 optional terminal set
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct GraphFile {
  WeightedDigraph graph;
  std::optional<VertexSet> terminals;
  std::vector<std::string> comments;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
GraphFile read_graph_file(const std::string& path);

// Deterministic output: comments, header, weights, arcs in ascending order,
// terminals.
void write_graph(std::ostream& out, const GraphFile& file);
std::string format_graph(const GraphFile& file);
void write_graph_file(const std::string& path, const GraphFile& file);

}  // namespace fvs
