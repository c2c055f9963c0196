#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "primeage/graph.hpp"

namespace primeage {

namespace detail {

// Backtracking induced-subgraph search. Pattern vertices are placed in a
// connectivity-first order; every unplaced pattern vertex keeps the set of
// target vertices whose adjacency to all placed images matches, and a branch
// dies as soon as one of those sets empties.
class EmbeddingSearch {
public:
  EmbeddingSearch(const Graph& pattern, const Graph& target)
      : h_(pattern), g_(target), words_(target.row_words()) {}

  std::optional<std::vector<Vertex>> run() {
    const std::size_t k = h_.n();
    if (k == 0) return std::vector<Vertex>{};
    if (k > g_.n()) return std::nullopt;
    if (k == g_.n() && h_.edge_count() != g_.edge_count()) return std::nullopt;

    plan_order();
    build_domains();
    for (const auto& d : domain_)
      if (std::all_of(d.begin(), d.end(), [](std::uint64_t w) { return w == 0; })) return std::nullopt;

    cand_.assign(k * k * words_, 0);
    for (std::size_t p = 0; p < k; ++p) std::copy(domain_[p].begin(), domain_[p].end(), cands(0, p));
    image_.assign(k, 0);
    if (!extend(0)) return std::nullopt;

    std::vector<Vertex> mapping(k);
    for (std::size_t d = 0; d < k; ++d) mapping[order_[d]] = image_[d];
    return mapping;
  }

private:
  void plan_order() {
    const std::size_t k = h_.n();
    std::vector<bool> placed(k, false);
    std::vector<std::size_t> links(k, 0);
    order_.clear();
    for (std::size_t step = 0; step < k; ++step) {
      std::size_t best = k;
      for (Vertex v = 0; v < k; ++v) {
        if (placed[v]) continue;
        if (best == k || links[v] > links[best] ||
            (links[v] == links[best] && h_.degree(v) > h_.degree(best)))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex v = 0; v < k; ++v)
        if (!placed[v] && h_.adjacent(best, v)) ++links[v];
    }
  }

  void build_domains() {
    const std::size_t k = h_.n(), n = g_.n();
    std::vector<std::size_t> gdeg(n);
    for (Vertex x = 0; x < n; ++x) gdeg[x] = g_.degree(x);
    domain_.assign(k, std::vector<std::uint64_t>(words_, 0));
    for (std::size_t d = 0; d < k; ++d) {
      const Vertex v = order_[d];
      const std::size_t hd = h_.degree(v), hnd = k - 1 - hd;
      for (Vertex x = 0; x < n; ++x)
        if (gdeg[x] >= hd && n - 1 - gdeg[x] >= hnd) domain_[d][x / 64] |= std::uint64_t{1} << (x % 64);
    }
  }

  // cand_ holds, per depth, the candidate sets of every pattern position at
  // or beyond that depth (forward checking): row block (depth, position).
  std::uint64_t* cands(std::size_t depth, std::size_t pos) {
    return cand_.data() + (depth * h_.n() + pos) * words_;
  }

  bool extend(std::size_t depth) {
    const std::size_t k = h_.n();
    if (depth == k) return true;
    std::uint64_t* mine = cands(depth, depth);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t m = mine[w]; m; m &= m - 1) {
        const Vertex x = w * 64 + static_cast<Vertex>(std::countr_zero(m));
        image_[depth] = x;
        if (depth + 1 == k) return true;
        auto row = g_.row(x);
        bool alive = true;
        for (std::size_t p = depth + 1; p < k && alive; ++p) {
          const std::uint64_t* src = cands(depth, p);
          std::uint64_t* dst = cands(depth + 1, p);
          const bool edge = h_.adjacent(order_[depth], order_[p]);
          for (std::size_t i = 0; i < words_; ++i) dst[i] = src[i] & (edge ? row[i] : ~row[i]);
          dst[x / 64] &= ~(std::uint64_t{1} << (x % 64));
          alive = std::any_of(dst, dst + words_, [](std::uint64_t v) { return v != 0; });
        }
        if (alive && extend(depth + 1)) return true;
      }
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::uint64_t>> domain_;
  std::vector<std::uint64_t> cand_;
  std::vector<Vertex> image_;
};

}  // namespace detail

/// An induced embedding of h into g: h.vertex v maps to g.vertex result[v].
inline std::optional<std::vector<Vertex>> find_embedding(const Graph& h, const Graph& g) {
  return detail::EmbeddingSearch(h, g).run();
}

/// True iff h is isomorphic to an induced subgraph of g.
inline bool embeds(const Graph& h, const Graph& g) { return find_embedding(h, g).has_value(); }

/// Checks that `mapping` is an injective, adjacency-preserving induced embedding.
inline bool is_induced_embedding(const Graph& h, const Graph& g, const std::vector<Vertex>& mapping) {
  if (mapping.size() != h.n()) return false;
  for (Vertex a = 0; a < h.n(); ++a) {
    if (mapping[a] >= g.n()) return false;
    for (Vertex b = a + 1; b < h.n(); ++b) {
      if (mapping[a] == mapping[b]) return false;
      if (h.adjacent(a, b) != g.adjacent(mapping[a], mapping[b])) return false;
    }
  }
  return true;
}

}  // namespace primeage
