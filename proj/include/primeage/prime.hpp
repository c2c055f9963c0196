#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "primeage/canon.hpp"
#include "primeage/generate.hpp"
#include "primeage/graph.hpp"

namespace primeage {

/// A nontrivial module: 2 <= |subset| < n, and every outside vertex sees
/// either all of it or none of it.
struct ModuleWitness {
  std::vector<Vertex> subset;
};

namespace detail {

inline std::uint64_t all_vertices(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline void require_core(const Graph& g, const char* what) {
  if (g.n() > kCoreWidth) throw std::length_error(std::string(what) + ": graph exceeds 64 vertices");
}

// Vertices outside `m` that see part, but not all, of `m`.
inline std::uint64_t splitters(const Graph& g, std::uint64_t m, std::uint64_t universe) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = universe & ~m; rest; rest &= rest - 1) {
    const auto x = static_cast<Vertex>(std::countr_zero(rest));
    const std::uint64_t seen = g.row64(x) & m;
    if (seen != 0 && seen != m) out |= std::uint64_t{1} << x;
  }
  return out;
}

// Smallest module of g containing `seed`.
inline std::uint64_t module_closure(const Graph& g, std::uint64_t seed) {
  const std::uint64_t universe = all_vertices(g.n());
  std::uint64_t m = seed;
  for (std::uint64_t s = splitters(g, m, universe); s; s = splitters(g, m, universe)) m |= s;
  return m;
}

}  // namespace detail

/// True iff every vertex outside `subset` is adjacent to all or none of it.
inline bool is_module(const Graph& g, std::uint64_t subset) {
  detail::require_core(g, "is_module");
  return detail::splitters(g, subset, detail::all_vertices(g.n())) == 0;
}

/// Closure-based module search: the smallest module containing each vertex
/// pair {a, b} is grown by adding splitters; the first pair (lexicographic)
/// whose closure is proper gives the witness.
inline std::optional<ModuleWitness> find_nontrivial_module(const Graph& g) {
  detail::require_core(g, "find_nontrivial_module");
  const std::size_t n = g.n();
  if (n < 3) return std::nullopt;
  const std::uint64_t universe = detail::all_vertices(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const std::uint64_t m = detail::module_closure(g, (std::uint64_t{1} << a) | (std::uint64_t{1} << b));
      if (m != universe) {
        ModuleWitness w;
        for (std::uint64_t r = m; r; r &= r - 1) w.subset.push_back(static_cast<Vertex>(std::countr_zero(r)));
        return w;
      }
    }
  return std::nullopt;
}

/// Graphs of order <= 2 count as prime.
inline bool is_prime(const Graph& g) { return !find_nontrivial_module(g).has_value(); }

inline bool is_critically_prime(const Graph& g) {
  if (g.n() < 4 || !is_prime(g)) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (is_prime(delete_vertex(g, v))) return false;
  return true;
}

/// Lexicographically first pair {c, d} whose removal leaves a prime graph.
/// A pair always exists once n >= 7; smaller graphs may have none.
inline std::optional<std::pair<Vertex, Vertex>> schmerl_trotter_pair(const Graph& g) {
  detail::require_core(g, "schmerl_trotter_pair");
  if (!is_prime(g)) throw std::invalid_argument("schmerl_trotter_pair: graph is not prime");
  const std::size_t n = g.n();
  if (n < 2) return std::nullopt;
  const std::uint64_t universe = detail::all_vertices(n);
  for (Vertex c = 0; c < n; ++c)
    for (Vertex d = c + 1; d < n; ++d) {
      const std::uint64_t rest = universe & ~(std::uint64_t{1} << c) & ~(std::uint64_t{1} << d);
      if (is_prime(induced_subgraph_mask(g, rest))) return std::make_pair(c, d);
    }
  return std::nullopt;
}

struct PrimeHeightRecord {
  CanonKey key;
  std::size_t height = 0;
  std::size_t order = 0;

  /// h <= |R| <= 2(h - 1), required for order >= 2.
  bool satisfies_order_bounds() const {
    if (order < 2) return true;
    return height <= order && order + 2 <= 2 * height;
  }
};

/// Heights of prime graphs in the embeddability order of prime graphs: the
/// length of a longest chain of primes from the empty graph. Memoised by
/// canonical key; the table is guarded so one instance may serve several
/// threads (entries are idempotent).
class PrimeHeights {
public:
  explicit PrimeHeights(std::size_t cap = 8) : cap_(cap) {}

  std::size_t cap() const { return cap_; }

  PrimeHeightRecord operator()(const Graph& g) {
    if (g.n() > cap_) throw std::length_error("prime_height: graph exceeds the configured cap");
    if (!is_prime(g)) throw std::invalid_argument("prime_height: graph is not prime");
    auto key = canonical_key(g);
    return {key, height(g, key), g.n()};
  }

  std::size_t memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

private:
  std::size_t height(const Graph& g, const CanonKey& key) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    std::size_t best = 0;
    const std::size_t n = g.n();
    if (n > 0) {
      const std::uint64_t full = detail::all_vertices(n);
      for (std::uint64_t s = 0; s < full; ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) < best) continue;
        Graph sub = induced_subgraph_mask(g, s);
        if (!is_prime(sub)) continue;
        best = std::max(best, height(sub, canonical_key(sub)) + 1);
      }
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(key, best);
    return best;
  }

  std::size_t cap_;
  mutable std::mutex mutex_;
  std::unordered_map<CanonKey, std::size_t, CanonKeyHash> memo_;
};

inline PrimeHeightRecord prime_height(const Graph& g, std::size_t cap = 8) { return PrimeHeights(cap)(g); }

/// Number of isomorphism classes of prime graphs of each order 0..n_max.
inline std::vector<std::size_t> prime_level_census(std::size_t n_max) {
  if (n_max > 8) throw std::invalid_argument("prime_level_census: n_max must be <= 8");
  const auto levels = graphs_up_to(n_max);
  std::vector<std::size_t> counts;
  for (const auto& level : levels) {
    std::size_t c = 0;
    for (const auto& g : level) c += is_prime(g) ? 1 : 0;
    counts.push_back(c);
  }
  return counts;
}

/// Prime representatives of every order 0..n_max, canonical forms.
inline std::vector<std::vector<Graph>> prime_graphs_up_to(std::size_t n_max) {
  auto levels = graphs_up_to(n_max);
  for (auto& level : levels) std::erase_if(level, [](const Graph& g) { return !is_prime(g); });
  return levels;
}

}  // namespace primeage
