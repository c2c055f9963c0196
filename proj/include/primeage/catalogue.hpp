#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primeage/embed.hpp"
#include "primeage/graph.hpp"
#include "primeage/prime.hpp"
#include "primeage/word_graphs.hpp"
#include "primeage/words.hpp"

namespace primeage {

/// Unavoidable prime families in large prime graphs (the sixth family, built
/// from a half-graph plus a clique side and one extra vertex, is not provided).
enum class Family { subdivided_star, line_of_k2n, line_of_subdivided_star, half_graph, chain_word_prime };

inline constexpr std::array<Family, 5> kFamilies = {Family::subdivided_star, Family::line_of_k2n,
                                                    Family::line_of_subdivided_star, Family::half_graph,
                                                    Family::chain_word_prime};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::subdivided_star: return "subdivided-star";
    case Family::line_of_k2n: return "line-of-K2n";
    case Family::line_of_subdivided_star: return "line-of-subdivided-star";
    case Family::half_graph: return "half-graph";
    case Family::chain_word_prime: return "chain-word-prime";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : kFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace detail {
inline void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}
}  // namespace detail

/// K_{1,n} with every edge subdivided: centre 0, subdivision vertices 1..n,
/// leaves n+1..2n.
inline Graph subdivided_star(std::size_t n) {
  detail::require_positive(n, "subdivided_star");
  Graph g(2 * n + 1);
  for (Vertex i = 1; i <= n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, n + i);
  }
  return g;
}

inline Graph line_of_k2n(std::size_t n) {
  detail::require_positive(n, "line_of_k2n");
  return line_graph(make::complete_bipartite(2, n));
}

inline Graph line_of_subdivided_star(std::size_t n) {
  detail::require_positive(n, "line_of_subdivided_star");
  return line_graph(subdivided_star(n));
}

/// u_1..u_n are vertices 0..n-1, v_1..v_n are n..2n-1; u_i ~ v_j iff i <= j.
inline Graph half_graph(std::size_t n) {
  detail::require_positive(n, "half_graph");
  Graph g(2 * n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i; j < n; ++j) g.add_edge(i, n + j);
  return g;
}

struct ChainWordPrime {
  Graph graph;
  bool prime = false;
};

/// Word graph of the length-n prefix of `seed` with its primality.
inline ChainWordPrime chain_word_prime(std::size_t n, const Word& seed = Word::fibonacci()) {
  Graph g = graph_of_word(seed, n);
  const bool p = g.n() <= kCoreWidth ? is_prime(g) : false;
  return {std::move(g), p};
}

inline Graph family_member(Family f, std::size_t n) {
  switch (f) {
    case Family::subdivided_star: return subdivided_star(n);
    case Family::line_of_k2n: return line_of_k2n(n);
    case Family::line_of_subdivided_star: return line_of_subdivided_star(n);
    case Family::half_graph: return half_graph(n);
    case Family::chain_word_prime: return chain_word_prime(n).graph;
  }
  throw std::invalid_argument("family_member: unknown family");
}

struct FamilyHit {
  Family family;
  bool complemented = false;
  std::vector<Vertex> embedding;

  friend bool operator==(const FamilyHit& a, const FamilyHit& b) {
    return a.family == b.family && a.complemented == b.complemented;
  }
};

/// Families whose parameter-n member, or its complement, is an induced
/// subgraph of g. The chain family uses `chain_seed` (Fibonacci by default).
inline std::vector<FamilyHit> detect_unavoidable(const Graph& g, std::size_t n,
                                                 const Word& chain_seed = Word::fibonacci()) {
  std::vector<FamilyHit> hits;
  for (Family f : kFamilies) {
    const Graph member = f == Family::chain_word_prime ? chain_word_prime(n, chain_seed).graph : family_member(f, n);
    for (bool comp : {false, true}) {
      const Graph pattern = comp ? complement(member) : member;
      if (auto emb = find_embedding(pattern, g)) hits.push_back({f, comp, std::move(*emb)});
    }
  }
  return hits;
}

}  // namespace primeage
