#include "loclab/graph6.hpp"

#include "loclab/errors.hpp"

namespace loclab {

namespace {

constexpr int kBias = 63;
constexpr int kLongHeader = 126;  // '~'

int sextet(std::string_view text, std::size_t pos, const char* what) {
  if (pos >= text.size()) throw ParseError(std::string("truncated ") + what, pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kLongHeader) {
    throw ParseError(std::string("byte outside graph6 range in ") + what, pos);
  }
  return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 record", 0);

  std::size_t pos = 0;
  int n = sextet(text, pos++, "header");
  if (n == kLongHeader - kBias) {
    if (pos < text.size() && text[pos] == static_cast<char>(kLongHeader)) {
      throw ParseError("graph order exceeds 64", pos);
    }
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++, "header");
    if (n > kMaxOrder) throw ParseError("graph order " + std::to_string(n) + " exceeds 64", 0);
    if (n < 63) throw ParseError("non-canonical long header", 0);
  }
  if (n == 0) throw ParseError("graph order 0 is not supported", 0);

  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  int word = 0;
  int remaining = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (remaining == 0) {
        word = sextet(text, pos++, "bit body");
        remaining = 6;
      }
      --remaining;
      if ((word >> remaining) & 1) {
        adj[static_cast<std::size_t>(i)] |= bit(j);
        adj[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  if (pos != text.size()) throw ParseError("trailing bytes after graph6 body", pos);
  return Graph::from_adjacency(adj);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongHeader));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

bool Graph6Reader::next(Graph6Line& out) {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
    if (text.empty()) continue;
    out.line_number = line_;
    out.text = std::move(text);
    return true;
  }
  return false;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> lines;
  Graph6Reader reader(in);
  Graph6Line line;
  while (reader.next(line)) lines.push_back(std::move(line));
  return lines;
}

}  // namespace loclab
