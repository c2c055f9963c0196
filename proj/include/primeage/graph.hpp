#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace primeage {

using Vertex = std::size_t;
using Label = std::int64_t;

/// Largest vertex count handled by the 64-bit kernels (modules, canonical forms).
inline constexpr std::size_t kCoreWidth = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Finite simple undirected graph.
///
/// Adjacency is stored as one bit row per vertex, `row_words()` 64-bit words
/// wide, so graphs of any order are representable; kernels that need a
/// single-word row check `n() <= kCoreWidth`. An optional label map assigns a
/// distinct integer to every vertex (word graphs use it for the vertex -1).
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  std::size_t n() const { return n_; }
  std::size_t row_words() const { return words_; }

  bool adjacent(Vertex a, Vertex b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }

  void add_edge(Vertex a, Vertex b) { set_edge(a, b, true); }
  void remove_edge(Vertex a, Vertex b) { set_edge(a, b, false); }

  void set_edge(Vertex a, Vertex b, bool on) {
    if (a >= n_ || b >= n_) throw std::out_of_range("graph: vertex index out of range");
    if (a == b) throw std::invalid_argument("graph: loops are not allowed");
    const std::uint64_t ma = std::uint64_t{1} << (a % 64);
    const std::uint64_t mb = std::uint64_t{1} << (b % 64);
    if (on) {
      bits_[a * words_ + b / 64] |= mb;
      bits_[b * words_ + a / 64] |= ma;
    } else {
      bits_[a * words_ + b / 64] &= ~mb;
      bits_[b * words_ + a / 64] &= ~ma;
    }
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }

  /// Neighbourhood as a single word; only valid when n() <= kCoreWidth.
  std::uint64_t row64(Vertex v) const { return words_ == 0 ? 0 : bits_[v * words_]; }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (auto w : bits_) total += std::popcount(w);
    return total / 2;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }

  Label label(Vertex v) const { return has_labels() ? labels_[v] : static_cast<Label>(v); }

  void set_labels(std::vector<Label> labels) {
    if (!labels.empty()) {
      if (labels.size() != n_) throw std::invalid_argument("graph: label map must cover every vertex");
      std::unordered_set<Label> seen(labels.begin(), labels.end());
      if (seen.size() != labels.size()) throw std::invalid_argument("graph: labels must be distinct");
    }
    labels_ = std::move(labels);
  }

  std::optional<Vertex> index_of(Label l) const {
    if (!has_labels()) {
      if (l >= 0 && static_cast<std::size_t>(l) < n_) return static_cast<Vertex>(l);
      return std::nullopt;
    }
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
  }

  /// Bit-exact equality, labels included.
  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Label> labels_;
};

inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  for (Vertex v : keep)
    if (v >= g.n()) throw std::out_of_range("induced_subgraph: vertex index out of range");
  Graph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (keep[i] == keep[j]) throw std::invalid_argument("induced_subgraph: repeated vertex");
      if (g.adjacent(keep[i], keep[j])) h.add_edge(i, j);
    }
  if (g.has_labels()) {
    std::vector<Label> labels;
    labels.reserve(keep.size());
    for (Vertex v : keep) labels.push_back(g.label(v));
    h.set_labels(std::move(labels));
  }
  return h;
}

inline Graph induced_subgraph(const Graph& g, std::initializer_list<Vertex> keep) {
  return induced_subgraph(g, std::span<const Vertex>(keep.begin(), keep.size()));
}

/// Induced subgraph on the vertices of a 64-bit mask (n() <= kCoreWidth).
inline Graph induced_subgraph_mask(const Graph& g, std::uint64_t mask) {
  std::vector<Vertex> keep;
  for (std::uint64_t m = mask; m; m &= m - 1) keep.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return induced_subgraph(g, keep);
}

inline Graph delete_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  keep.reserve(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

inline Graph complement(const Graph& g) {
  Graph h(g.n());
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      if (!g.adjacent(a, b)) h.add_edge(a, b);
  if (g.has_labels()) h.set_labels(g.labels());
  return h;
}

/// Vertices are the edges of `g` in lexicographic order; two are adjacent iff
/// the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  Graph h(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) h.add_edge(i, j);
    }
  return h;
}

/// Disjoint union; vertices of `b` follow those of `a`. Labels are dropped.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.n() + b.n());
  for (auto [x, y] : a.edges()) h.add_edge(x, y);
  for (auto [x, y] : b.edges()) h.add_edge(a.n() + x, a.n() + y);
  return h;
}

/// Relabel vertices: vertex v of `g` becomes vertex perm[v] of the result.
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  Graph h(g.n());
  for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
  if (g.has_labels()) {
    std::vector<Label> labels(g.n());
    for (Vertex v = 0; v < g.n(); ++v) labels[perm[v]] = g.label(v);
    h.set_labels(std::move(labels));
  }
  return h;
}

inline Graph strip_labels(Graph g) {
  g.set_labels({});
  return g;
}

namespace make {

inline Graph empty(std::size_t n) { return Graph(n); }

inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n != 0 && n < 3) throw std::invalid_argument("make::cycle: need n >= 3");
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph clique(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y) g.add_edge(x, a + y);
  return g;
}

/// Star K_{1,n} with centre 0.
inline Graph star(std::size_t n) { return complete_bipartite(1, n); }

}  // namespace make

}  // namespace primeage
