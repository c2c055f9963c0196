#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "primeage/canon.hpp"
#include "primeage/graph.hpp"

namespace primeage {

/// One representative per isomorphism class of graphs of each order 0..n_max,
/// sorted by canonical key. Order n is produced by adding a vertex with every
/// possible neighbourhood to each class of order n-1 and deduplicating.
inline std::vector<std::vector<Graph>> graphs_up_to(std::size_t n_max) {
  if (n_max > 10) throw std::invalid_argument("graphs_up_to: exhaustive generation is limited to 10 vertices");
  std::vector<std::vector<Graph>> levels(n_max + 1);
  levels[0].push_back(Graph(0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::map<CanonKey, Graph> seen;
    for (const Graph& base : levels[n - 1]) {
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
        Graph g(n);
        for (auto [a, b] : base.edges()) g.add_edge(a, b);
        for (Vertex v = 0; v + 1 < n; ++v)
          if ((nbrs >> v) & 1u) g.add_edge(v, n - 1);
        auto key = canonical_key(g);
        if (!seen.contains(key)) seen.emplace(std::move(key), canonical_form(g));
      }
    }
    for (auto& [key, g] : seen) levels[n].push_back(std::move(g));
  }
  return levels;
}

}  // namespace primeage
