#pragma once

// Brute-force reference implementations. They share no code path with the
// fast kernels they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "primeage/graph.hpp"

namespace primeage::oracle {

/// Every vertex subset S with 2 <= |S| < n, checked pair by pair.
inline std::optional<std::vector<Vertex>> nontrivial_module(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 3 || n > 20) return std::nullopt;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    bool module = true;
    for (Vertex x = 0; x < n && module; ++x) {
      if ((s >> x) & 1u) continue;
      std::optional<bool> seen;
      for (Vertex a = 0; a < n && module; ++a) {
        if (!((s >> a) & 1u)) continue;
        const bool e = g.adjacent(x, a);
        if (seen && *seen != e) module = false;
        seen = e;
      }
    }
    if (module) {
      std::vector<Vertex> out;
      for (Vertex v = 0; v < n; ++v)
        if ((s >> v) & 1u) out.push_back(v);
      return out;
    }
  }
  return std::nullopt;
}

inline bool is_prime(const Graph& g) { return !nontrivial_module(g).has_value(); }

inline bool is_module(const Graph& g, const std::vector<Vertex>& subset) {
  std::vector<bool> in(g.n(), false);
  for (Vertex v : subset) in[v] = true;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (in[x]) continue;
    for (Vertex a : subset)
      if (g.adjacent(x, a) != g.adjacent(x, subset.front())) return false;
  }
  return true;
}

/// Isomorphism by trying every permutation (small graphs only).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.n());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex x = 0; x < a.n() && ok; ++x)
      for (Vertex y = x + 1; y < a.n() && ok; ++y) ok = a.adjacent(x, y) == b.adjacent(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Induced embedding by enumerating every vertex subset of g of size |h|.
inline bool embeds(const Graph& h, const Graph& g) {
  if (h.n() > g.n()) return false;
  if (h.n() == 0) return true;
  const std::uint64_t limit = std::uint64_t{1} << g.n();
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != h.n()) continue;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
      if ((s >> v) & 1u) keep.push_back(v);
    if (oracle::isomorphic(h, induced_subgraph(g, keep))) return true;
  }
  return false;
}

}  // namespace primeage::oracle
