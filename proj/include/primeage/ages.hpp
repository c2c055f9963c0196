#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "primeage/canon.hpp"
#include "primeage/embed.hpp"
#include "primeage/graph.hpp"
#include "primeage/prime.hpp"
#include "primeage/word_graphs.hpp"

namespace primeage {

/// Isomorphism classes of induced subgraphs of `source` with at most k_max
/// vertices, one level per order. Members are stored by canonical key with
/// their canonical representative.
struct AgeApprox {
  std::string source_description;
  Graph source;
  std::size_t k_max = 0;
  std::vector<std::map<CanonKey, Graph>> levels;

  bool contains(const CanonKey& key) const {
    const std::size_t k = key.order();
    return k < levels.size() && levels[k].contains(key);
  }

  std::size_t member_count() const {
    std::size_t c = 0;
    for (const auto& l : levels) c += l.size();
    return c;
  }
};

/// A graph outside the age all of whose one-vertex deletions are inside.
/// Non-membership is only known at the recorded scale.
struct BoundCertificate {
  CanonKey key;
  Graph graph;
  std::size_t checked_deletions = 0;
  std::size_t scale = 0;   // word prefix length (0 when the source is an explicit graph)
  bool stable = false;     // still a bound when the scale is doubled
};

struct AgeExploration {
  AgeApprox age;
  std::vector<BoundCertificate> bounds;  // sorted by (order, key)
};

namespace detail {

// Evaluates `test` on every index in [0, count) using up to `threads` workers.
// Each index writes its own slot, so the outcome is independent of scheduling.
template <class Fn>
std::vector<char> parallel_flags(std::size_t count, unsigned threads, Fn test) {
  std::vector<char> out(count, 0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = test(i) ? 1 : 0;
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) out[i] = test(i) ? 1 : 0;
    });
  for (auto& th : pool) th.join();
  return out;
}

inline bool all_deletions_in(const Graph& g, const AgeApprox& age) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (!age.contains(canonical_key(delete_vertex(g, v)))) return false;
  return true;
}

}  // namespace detail

namespace detail {

// Bits of feasible internal vertex indices (0 = label -1, t = label t-1).
using PositionSet = std::vector<std::uint64_t>;

inline bool test_bit(const PositionSet& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1u; }
inline void set_bit(PositionSet& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }

inline std::optional<std::size_t> lowest(const PositionSet& s) {
  for (std::size_t w = 0; w < s.size(); ++w)
    if (s[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(s[w]));
  return std::nullopt;
}

// Depth-first walk over the induced subgraphs of a word graph G(u).
//
// For chosen vertices s_1 < ... < s_k of G(u), the induced graph depends only
// on each later vertex's letter x_b = u(s_b) and on whether s_b = s_{b-1} + 1:
// vertex b sees every earlier vertex iff x_b = 0, except that when s_b is the
// successor of s_{b-1} that single pair is flipped. The walk carries the set
// of positions where the last chosen vertex can sit, so every realizable step
// sequence is visited exactly once.
class WordGraphWalk {
public:
  WordGraphWalk(std::string_view bits, std::size_t k_max, std::vector<std::map<CanonKey, Graph>>& levels)
      : bits_(bits), n_(bits.size() + 1), k_max_(k_max), levels_(levels) {}

  void run() {
    record(Graph(0));
    if (k_max_ == 0 || n_ == 0) return;
    PositionSet all(words_for(n_), 0);
    for (std::size_t v = 0; v < n_; ++v) set_bit(all, v);
    Graph g(1);
    walk(g, all);
  }

private:
  void record(const Graph& g) {
    auto key = canonical_key(g);
    auto& level = levels_[g.n()];
    if (!level.contains(key)) level.emplace(std::move(key), canonical_form(g));
  }

  char letter(std::size_t v) const { return bits_[v - 1]; }

  void walk(const Graph& g, const PositionSet& where) {
    record(g);
    const std::size_t k = g.n();
    if (k == k_max_) return;
    const std::size_t lo = *lowest(where);
    for (char x : {'0', '1'})
      for (bool successor : {false, true}) {
        PositionSet next(where.size(), 0);
        bool any = false;
        if (successor) {
          for (std::size_t v = 0; v + 1 < n_; ++v)
            if (test_bit(where, v) && letter(v + 1) == x) {
              set_bit(next, v + 1);
              any = true;
            }
        } else {
          for (std::size_t v = lo + 2; v < n_; ++v)
            if (letter(v) == x) {
              set_bit(next, v);
              any = true;
            }
        }
        if (!any) continue;
        Graph h(k + 1);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        const bool sees_all = x == '0';
        for (Vertex a = 0; a < k; ++a) {
          const bool flipped = successor && a + 1 == k;
          if (sees_all != flipped) h.add_edge(a, k);
        }
        walk(h, next);
      }
  }

  std::string_view bits_;
  std::size_t n_;
  std::size_t k_max_;
  std::vector<std::map<CanonKey, Graph>>& levels_;
};

// Candidates one vertex larger than the members of `level`, keyed canonically.
inline std::map<CanonKey, Graph> one_vertex_extensions(const std::map<CanonKey, Graph>& level, std::size_t k) {
  std::map<CanonKey, Graph> candidates;
  for (const auto& [key, base] : level) {
    for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << k); ++nbrs) {
      Graph g(k + 1);
      for (auto [a, b] : base.edges()) g.add_edge(a, b);
      for (Vertex v = 0; v < k; ++v)
        if ((nbrs >> v) & 1u) g.add_edge(v, k);
      auto ck = canonical_key(g);
      if (!candidates.contains(ck)) candidates.emplace(std::move(ck), canonical_form(g));
    }
  }
  return candidates;
}

}  // namespace detail

/// Age of G(u) for a finite word u, up to order k_max, via the step-sequence
/// walk (no embedding search).
inline AgeApprox word_graph_age(std::string_view bits, std::size_t k_max) {
  if (k_max > kCoreWidth) throw std::invalid_argument("age_enumerate: k_max exceeds 64");
  AgeApprox age;
  age.source_description = "word prefix L=" + std::to_string(bits.size());
  age.source = graph_of_bits(bits);
  age.k_max = k_max;
  age.levels.resize(k_max + 1);
  detail::WordGraphWalk(bits, std::min(k_max, bits.size() + 1), age.levels).run();
  return age;
}

/// Bounds of an age approximation up to its k_max: one-vertex extensions of
/// members that are not members themselves while all their deletions are.
inline std::vector<BoundCertificate> bounds_of(const AgeApprox& age, std::size_t scale = 0) {
  std::vector<BoundCertificate> out;
  for (std::size_t k = 0; k < age.k_max; ++k) {
    for (auto& [key, g] : detail::one_vertex_extensions(age.levels[k], k)) {
      if (age.levels[k + 1].contains(key)) continue;
      bool deletions_in = true;
      for (Vertex v = 0; v < g.n() && deletions_in; ++v)
        deletions_in = age.contains(canonical_key(delete_vertex(g, v)));
      if (deletions_in) out.push_back({key, g, g.n(), scale, false});
    }
  }
  return out;
}

/// Level-by-level exploration. Every member of order k+1 and every bound of
/// order k+1 is a one-vertex extension of a member of order k, so candidates
/// are all extensions of the current level, deduplicated by canonical key and
/// tested by induced-embedding search against the source.
inline AgeExploration explore_age(const Graph& source, std::size_t k_max, std::string description = {},
                                  unsigned threads = 1) {
  if (k_max > kCoreWidth) throw std::invalid_argument("age_enumerate: k_max exceeds 64");
  AgeExploration out;
  out.age.source_description = std::move(description);
  out.age.source = source;
  out.age.k_max = k_max;
  out.age.levels.resize(k_max + 1);
  out.age.levels[0].emplace(canonical_key(Graph(0)), Graph(0));

  for (std::size_t k = 0; k < k_max; ++k) {
    const auto candidates = detail::one_vertex_extensions(out.age.levels[k], k);
    std::vector<const std::pair<const CanonKey, Graph>*> list;
    for (const auto& entry : candidates) list.push_back(&entry);
    const auto inside =
        detail::parallel_flags(list.size(), threads, [&](std::size_t i) { return embeds(list[i]->second, source); });
    std::vector<const std::pair<const CanonKey, Graph>*> outside;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (inside[i])
        out.age.levels[k + 1].emplace(list[i]->first, list[i]->second);
      else
        outside.push_back(list[i]);
    }
    for (const auto* entry : outside)
      if (detail::all_deletions_in(entry->second, out.age))
        out.bounds.push_back({entry->first, entry->second, entry->second.n(), 0, false});
  }
  return out;
}

inline AgeApprox age_enumerate(const Graph& source, std::size_t k_max, std::string description = {},
                               unsigned threads = 1) {
  if (k_max > source.n()) throw std::invalid_argument("age_enumerate: k_max exceeds the source order");
  return explore_age(source, k_max, std::move(description), threads).age;
}

inline AgeApprox age_enumerate(const Word& w, std::size_t length, std::size_t k_max) {
  if (k_max > length + 1) throw std::invalid_argument("age_enumerate: k_max exceeds the source order");
  return word_graph_age(w.prefix(length), k_max);
}

/// Test oracle: every vertex subset of the source, deduplicated by key.
inline AgeApprox age_enumerate_exhaustive(const Graph& source, std::size_t k_max) {
  if (source.n() > 20) throw std::invalid_argument("age_enumerate_exhaustive: source too large");
  AgeApprox age;
  age.source = source;
  age.k_max = k_max;
  age.levels.resize(k_max + 1);
  const std::uint64_t limit = std::uint64_t{1} << source.n();
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) > k_max) continue;
    Graph g = strip_labels(induced_subgraph_mask(source, s));
    auto key = canonical_key(g);
    auto& level = age.levels[g.n()];
    if (!level.contains(key)) level.emplace(std::move(key), canonical_form(g));
  }
  return age;
}

struct InclusionResult {
  bool included = true;            // "yes at scale" when true
  std::optional<Graph> witness;    // member of a that is missing from b
};

/// Compares a and b on orders 0..min(k_max); a witness is the smallest
/// member of a (by order, then key) that b lacks.
inline InclusionResult age_includes(const AgeApprox& a, const AgeApprox& b) {
  const std::size_t k = std::min(a.k_max, b.k_max);
  for (std::size_t level = 0; level <= k; ++level)
    for (const auto& [key, g] : a.levels[level])
      if (!b.levels[level].contains(key)) return {false, g};
  return {true, std::nullopt};
}

/// Bound candidates for G(w, L) up to order k_max, each re-checked: every
/// deletion embeds in the word graph and the graph itself does not. The
/// certificate is marked stable when it also holds for G(w, 2L).
inline std::vector<BoundCertificate> bounds_enumerate(const Word& w, std::size_t length, std::size_t k_max) {
  const AgeApprox age = word_graph_age(w.prefix(length), k_max);
  const AgeApprox doubled = word_graph_age(w.prefix(2 * length), k_max);
  auto certs = bounds_of(age, length);
  for (auto& cert : certs) cert.stable = !doubled.contains(cert.key);
  return certs;
}

/// Re-validates a certificate from scratch against a source graph.
inline bool validate_bound(const BoundCertificate& cert, const Graph& source) {
  if (canonical_key(cert.graph) != cert.key) return false;
  if (embeds(cert.graph, source)) return false;
  for (Vertex v = 0; v < cert.graph.n(); ++v)
    if (!embeds(delete_vertex(cert.graph, v), source)) return false;
  return true;
}

struct Antichain {
  std::size_t min_order = 0;
  std::size_t max_order = 0;
  std::vector<Graph> members;
};

/// Largest antichain under embeddability among members whose order lies in
/// [lo, hi]. Dilworth/König: a maximum matching in the bipartite graph of
/// strict embeddings gives a minimum chain cover, and the vertices outside a
/// minimum vertex cover form a maximum antichain.
inline Antichain antichain_search(const AgeApprox& age, std::size_t lo, std::size_t hi) {
  std::vector<const Graph*> items;
  for (std::size_t k = lo; k <= std::min(hi, age.k_max); ++k)
    for (const auto& [key, g] : age.levels[k]) items.push_back(&g);
  const std::size_t n = items.size();
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (items[i]->n() < items[j]->n() && embeds(*items[i], *items[j])) above[i].push_back(j);

  const std::size_t none = n;
  std::vector<std::size_t> match_right(n, none), match_left(n, none);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : above[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] == none || augment(match_right[v])) {
        match_right[v] = u;
        match_left[u] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    visited.assign(n, 0);
    augment(u);
  }
  // König: Z = vertices reachable from unmatched left vertices by alternating paths.
  std::vector<char> left_reached(n, 0), right_reached(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t u) {
    if (left_reached[u]) return;
    left_reached[u] = 1;
    for (std::size_t v : above[u]) {
      if (right_reached[v]) continue;
      right_reached[v] = 1;
      if (match_right[v] != none) walk(match_right[v]);
    }
  };
  for (std::size_t u = 0; u < n; ++u)
    if (match_left[u] == none) walk(u);
  // Cover = (left not reached) + (right reached); antichain = elements in neither side of the cover.
  Antichain out{lo, hi, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (left_reached[i] && !right_reached[i]) out.members.push_back(*items[i]);
  return out;
}

inline bool is_antichain(const std::vector<Graph>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (i != j && embeds(members[i], members[j])) return false;
  return true;
}

struct CofinalityEntry {
  std::size_t n = 0;
  std::optional<std::size_t> m;                          // least m found, if any
  std::optional<std::pair<Graph, Graph>> failure;        // (small, large) blocking m = k_max
};

/// Evidence report for the prime members of an age approximation: per-order
/// counts and, for each n, the least m such that every prime member of order
/// <= n embeds in every prime member of order >= m (at least one such large
/// member must exist within the approximation).
struct JonssonReport {
  std::size_t k_max = 0;
  bool prime_only = true;
  std::vector<std::size_t> level_counts;
  std::vector<CofinalityEntry> cofinality;
  bool degenerate = false;  // no prime members above order 2

  bool cofinal_up_to(std::size_t n_max) const {
    for (const auto& e : cofinality)
      if (e.n <= n_max && !e.m) return false;
    return cofinality.size() > n_max;
  }
};

inline JonssonReport jonsson_desk_check(const AgeApprox& age, bool prime_only, std::size_t n_max) {
  JonssonReport rep;
  rep.k_max = age.k_max;
  rep.prime_only = prime_only;
  std::vector<std::vector<const Graph*>> members(age.k_max + 1);
  for (std::size_t k = 0; k <= age.k_max; ++k)
    for (const auto& [key, g] : age.levels[k])
      if (!prime_only || is_prime(g)) members[k].push_back(&g);
  for (const auto& level : members) rep.level_counts.push_back(level.size());
  rep.degenerate = true;
  for (std::size_t k = 3; k <= age.k_max; ++k)
    if (!members[k].empty()) rep.degenerate = false;

  // below[i][j]: member i embeds in member j, flattened over all levels.
  std::vector<const Graph*> flat;
  std::vector<std::size_t> order_of;
  for (std::size_t k = 0; k <= age.k_max; ++k)
    for (const Graph* g : members[k]) {
      flat.push_back(g);
      order_of.push_back(k);
    }
  const std::size_t total = flat.size();
  std::vector<std::vector<char>> below(total, std::vector<char>(total, 0));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      below[i][j] = order_of[i] <= order_of[j] && embeds(*flat[i], *flat[j]);

  for (std::size_t n = 0; n <= std::min(n_max, age.k_max); ++n) {
    CofinalityEntry entry{n, std::nullopt, std::nullopt};
    for (std::size_t m = 0; m <= age.k_max && !entry.m; ++m) {
      bool any_large = false, ok = true;
      for (std::size_t j = 0; j < total && ok; ++j) {
        if (order_of[j] < m) continue;
        any_large = true;
        for (std::size_t i = 0; i < total && ok; ++i)
          if (order_of[i] <= n && !below[i][j]) {
            ok = false;
            if (m == age.k_max) entry.failure = std::make_pair(*flat[i], *flat[j]);
          }
      }
      if (ok && any_large) entry.m = m;
    }
    rep.cofinality.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace primeage
