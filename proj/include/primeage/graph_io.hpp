#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primeage/graph.hpp"

namespace primeage {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace graph6 {

namespace detail {

inline void encode_n(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735ull) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw FormatError("graph6: order too large");
  }
}

inline int sextet(char c) {
  if (c < 63 || c > 126) throw FormatError("graph6: byte outside printable range 63..126");
  return c - 63;
}

}  // namespace detail

/// graph6 encoding (no header, no trailing newline).
inline std::string encode(const Graph& g) {
  std::string out;
  const std::size_t n = g.n();
  detail::encode_n(out, n);
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 line. An optional ">>graph6<<" header is accepted;
/// surrounding whitespace is ignored.
inline Graph decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0, n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(detail::sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw FormatError("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(detail::sextet(text[i]));
    pos = 4;
  } else {
    if (text.size() < 8) throw FormatError("graph6: truncated order field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(detail::sextet(text[i]));
    pos = 8;
  }
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) throw FormatError("graph6: body length does not match vertex count");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int s = detail::sextet(text[pos + k / 6]);
      if ((s >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6) {
    const int s = detail::sextet(text[pos + need - 1]);
    if (s & ((1 << (6 - bits % 6)) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return g;
}

inline std::vector<Graph> read_all(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(decode(line));
  }
  return out;
}

inline void write_all(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << encode(g) << '\n';
}

}  // namespace graph6

/// DOT rendering; vertices are named by their labels.
inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  \"" << g.label(v) << "\";\n";
  for (auto [a, b] : g.edges()) out << "  \"" << g.label(a) << "\" -- \"" << g.label(b) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace primeage
