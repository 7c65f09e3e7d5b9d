#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "loclab/graph.hpp"

namespace loclab {

/// Decodes one graph6 record (no trailing newline). Throws ParseError with
/// the offending byte offset on a bad header, a short body, or n > 64.
Graph from_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// One line of a graph6 stream, kept raw so that parse failures can be
/// reported per line without aborting the whole stream.
struct Graph6Line {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

/// Incremental reader over a newline-delimited stream. Blank lines and an
/// optional leading ">>graph6<<" marker are skipped; trailing '\r' is stripped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}
  bool next(Graph6Line& out);

 private:
  std::istream* in_;
  std::size_t line_ = 0;
};

/// Reads newline-delimited graph6 records. Blank lines and an optional
/// leading ">>graph6<<" marker are skipped; trailing '\r' is stripped.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

}  // namespace loclab
