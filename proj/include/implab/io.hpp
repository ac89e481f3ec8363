#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "implab/graph.hpp"

namespace implab {

/// Malformed graph text; `offset` is the byte position of the first bad character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace graph6 {

inline constexpr std::string_view kHeader = ">>graph6<<";

inline std::string encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph decode(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::string_view body = text.substr(base);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
  auto byte = [&](std::size_t i) -> int {
    if (i >= body.size()) throw ParseError("graph6 string truncated", base + i);
    const int c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", base + i);
    return c - 63;
  };
  std::size_t pos = 0;
  long long n = byte(pos++);
  if (n == 63) {
    if (body.size() > 1 && body[1] == '~') {
      pos = 2;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | byte(pos++);
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos++);
    }
  }
  if (n > Graph::kMaxVertices)
    throw ParseError("graph of order " + std::to_string(n) + " exceeds supported maximum", base);
  Graph g(static_cast<int>(n));
  const std::size_t nbits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t nbytes = (nbits + 5) / 6;
  if (body.size() - pos != nbytes)
    throw ParseError("graph6 length mismatch: expected " + std::to_string(nbytes) + " data bytes",
                     base + std::min(body.size(), pos + nbytes));
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int b = byte(pos + bit / 6);
      if ((b >> (5 - static_cast<int>(bit % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const int last = byte(pos + nbytes - 1);
    if (last & ((1 << (6 - static_cast<int>(nbits % 6))) - 1))
      throw ParseError("graph6 padding bits not zero", base + pos + nbytes - 1);
  }
  return g;
}

/// Newline-separated stream; blank lines are skipped.
inline std::vector<Graph> decode_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(decode(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("graph6 stream line: ") + e.what(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace graph6

/// Plain adjacency list: "u-v" edges and bare "v" vertex declarations separated by commas
/// or newlines. The order is one more than the largest id mentioned.
namespace adjacency_list {

inline std::string encode(const Graph& g) {
  std::vector<std::string> items;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) items.push_back(std::to_string(v));
  }
  std::ostringstream out;
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  for (const auto& s : items) {
    out << (first ? "" : ",") << s;
    first = false;
  }
  return out.str();
}

inline Graph decode(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int max_id = -1;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  auto number = [&]() -> int {
    skip_space();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected vertex id", i);
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v >= Graph::kMaxVertices) throw ParseError("vertex id exceeds supported maximum", i);
      ++i;
    }
    skip_space();
    return static_cast<int>(v);
  };
  while (true) {
    skip_space();
    while (i < text.size() && (text[i] == ',' || text[i] == '\n')) {
      ++i;
      skip_space();
    }
    if (i >= text.size()) break;
    const int u = number();
    max_id = std::max(max_id, u);
    if (i < text.size() && text[i] == '-') {
      ++i;
      const int v = number();
      if (u == v) throw ParseError("self-loop", i);
      max_id = std::max(max_id, v);
      edges.emplace_back(u, v);
    }
    if (i < text.size() && text[i] != ',' && text[i] != '\n')
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
  }
  Graph g(max_id + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace adjacency_list

}  // namespace implab
