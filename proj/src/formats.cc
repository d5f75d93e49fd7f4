#include "cograph/formats.h"

#include <algorithm>
#include <charconv>
#include <vector>

namespace cograph {

namespace {

constexpr int kOffset = 63;

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

Graph ParseGraph6(std::string_view text) {
  if (text.empty()) throw FormatError("graph6: empty input");
  const int size_byte = static_cast<unsigned char>(text[0]);
  const int n = size_byte - kOffset;
  if (n < 0 || n > kMaxGraph6Order) {
    throw FormatError("graph6: bad size byte " + std::to_string(size_byte) +
                      " (only n <= 62 is supported)");
  }
  const std::size_t bits = std::size_t(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < 1 + bytes) {
    throw FormatError("graph6: truncated bit stream, expected " +
                      std::to_string(bytes) + " data bytes, got " +
                      std::to_string(text.size() - 1));
  }
  if (text.size() > 1 + bytes) {
    throw FormatError("graph6: " + std::to_string(text.size() - 1 - bytes) +
                      " trailing bytes");
  }
  std::vector<bool> stream;
  stream.reserve(bytes * 6);
  for (std::size_t i = 0; i < bytes; ++i) {
    const int value = static_cast<unsigned char>(text[1 + i]) - kOffset;
    if (value < 0 || value > 63) {
      throw FormatError("graph6: byte " + std::to_string(i + 1) +
                        " out of range");
    }
    for (int shift = 5; shift >= 0; --shift) {
      stream.push_back(((value >> shift) & 1) != 0);
    }
  }
  for (std::size_t i = bits; i < stream.size(); ++i) {
    if (stream[i]) throw FormatError("graph6: nonzero padding bits");
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (stream[k++]) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(n, edges);
}

std::string ToGraph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw FormatError("graph6: order " + std::to_string(n) + " exceeds 62");
  }
  std::string out(1, static_cast<char>(n + kOffset));
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((value << (6 - filled)) + kOffset));
  }
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex max_label = 0;
  int line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    std::vector<Vertex> labels;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && IsBlank(line[pos])) ++pos;
      if (pos == line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !IsBlank(line[end])) ++end;
      const std::string_view token = line.substr(pos, end - pos);
      Vertex value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw FormatError("edge list line " + std::to_string(line_no) +
                          ": non-integer token '" + std::string(token) + "'");
      }
      if (value < 1) {
        throw FormatError("edge list line " + std::to_string(line_no) +
                          ": labels must be >= 1");
      }
      labels.push_back(value);
      pos = end;
    }
    if (labels.empty()) continue;
    if (labels.size() == 1) {
      // A lone label declares a vertex, so isolated vertices are expressible.
      max_label = std::max(max_label, labels[0]);
      continue;
    }
    if (labels.size() != 2) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": expected two labels");
    }
    if (labels[0] == labels[1]) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": self-loop at " + std::to_string(labels[0]));
    }
    max_label = std::max({max_label, labels[0], labels[1]});
    edges.emplace_back(labels[0], labels[1]);
  }
  if (max_label == 0) throw FormatError("edge list: no vertices");
  return Graph(max_label, edges);
}

std::string ToEdgeList(const Graph& g) {
  std::string out;
  Vertex largest = 0;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
    largest = std::max(largest, v);
  }
  if (g.order() > largest) out += std::to_string(g.order()) + "\n";
  return out;
}

}  // namespace cograph
