#pragma once

#include <stdexcept>
#include <string_view>

#include "primeage/embed.hpp"
#include "primeage/graph.hpp"
#include "primeage/words.hpp"

namespace primeage {

/// G_mu of a finite word u_0..u_{L-1}: vertices labelled -1, 0, ..., L-1 (in
/// that internal order); for labels i < j, {i, j} is an edge iff u_j = 1 and
/// j = i + 1, or u_j = 0 and j != i + 1.
inline Graph graph_of_bits(std::string_view bits) {
  detail::require_bits(bits, "graph_of_word");
  const std::size_t n = bits.size() + 1;
  Graph g(n);
  for (Vertex vj = 1; vj < n; ++vj) {
    const bool one = bits[vj - 1] == '1';
    for (Vertex vi = 0; vi < vj; ++vi) {
      const bool consecutive = vi + 1 == vj;
      if (one == consecutive) g.add_edge(vi, vj);
    }
  }
  std::vector<Label> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = static_cast<Label>(v) - 1;
  g.set_labels(std::move(labels));
  return g;
}

inline Graph graph_of_word(const Word& w, std::size_t length) { return graph_of_bits(w.prefix(length)); }

/// G^nu of a finite word v_0..v_{L-1}: vertices labelled 0..L; for i < j,
/// {i, j} is an edge iff v_i = 1 and j = i + 1, or v_i = 0 and j != i + 1.
inline Graph graph_of_bits_forward(std::string_view bits) {
  detail::require_bits(bits, "graph_of_word_forward");
  const std::size_t n = bits.size() + 1;
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) {
    const bool one = bits[i] == '1';
    for (Vertex j = i + 1; j < n; ++j) {
      const bool consecutive = i + 1 == j;
      if (one == consecutive) g.add_edge(i, j);
    }
  }
  std::vector<Label> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = static_cast<Label>(v);
  g.set_labels(std::move(labels));
  return g;
}

inline Graph graph_of_word_forward(const Word& w, std::size_t length) {
  return graph_of_bits_forward(w.prefix(length));
}

/// Positive-only membership: a finite prefix can witness that h is in the
/// age, never that it is not.
enum class AgeVerdict { yes, not_found_at_scale };

inline AgeVerdict age_membership(const Graph& h, const Word& w, std::size_t length) {
  if (h.n() > length + 1) throw std::invalid_argument("age_membership: pattern larger than the word graph");
  return embeds(h, graph_of_word(w, length)) ? AgeVerdict::yes : AgeVerdict::not_found_at_scale;
}

}  // namespace primeage
