#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "primeage/graph.hpp"

namespace primeage {

/// Byte string identifying an isomorphism class: order byte followed by the
/// packed upper triangle of the canonically relabelled adjacency matrix.
struct CanonKey {
  std::string bytes;

  std::size_t order() const { return bytes.empty() ? 0 : static_cast<unsigned char>(bytes[0]); }

  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
  friend bool operator==(const CanonKey&, const CanonKey&) = default;
};

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

namespace detail {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into splitter cells until the ordered
// partition is equitable. Subcells are ordered by count, so the result only
// depends on the cell structure and the adjacency, never on vertex names.
inline void refine(const std::vector<std::uint64_t>& adj, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::uint64_t splitter = 0;
      for (Vertex v : cells[s]) splitter |= std::uint64_t{1} << v;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::vector<std::pair<int, Vertex>> counted;
        counted.reserve(cells[c].size());
        for (Vertex v : cells[c]) counted.emplace_back(std::popcount(adj[v] & splitter), v);
        bool uniform = std::all_of(counted.begin(), counted.end(),
                                   [&](const auto& p) { return p.first == counted.front().first; });
        if (uniform) continue;
        std::stable_sort(counted.begin(), counted.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        Cells pieces;
        for (std::size_t i = 0; i < counted.size(); ++i) {
          if (i == 0 || counted[i].first != counted[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(counted[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

class CanonSearch {
public:
  explicit CanonSearch(const Graph& g) : n_(g.n()), adj_(g.n()) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.row64(v);
  }

  // Returns position[v] for the canonical relabelling.
  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Cells cells(1);
    cells[0].resize(n_);
    std::iota(cells[0].begin(), cells[0].end(), Vertex{0});
    std::vector<Vertex> prefix;
    search(std::move(cells), prefix);
    return best_pos_;
  }

private:
  std::vector<std::uint64_t> certificate(const std::vector<Vertex>& pos) const {
    std::vector<std::uint64_t> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (std::uint64_t m = adj_[v]; m; m &= m - 1)
        rows[pos[v]] |= std::uint64_t{1} << pos[std::countr_zero(m)];
    return rows;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> pos(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i][0]] = i;
    auto cert = certificate(pos);
    if (best_pos_.empty()) {
      best_pos_ = pos;
      best_cert_ = std::move(cert);
      first_pos_ = pos;
      first_cert_ = best_cert_;
      return;
    }
    auto record_automorphism = [&](const std::vector<Vertex>& other) {
      // other^{-1} o pos maps v to the vertex sharing its canonical position.
      std::vector<Vertex> inv(n_);
      for (Vertex v = 0; v < n_; ++v) inv[other[v]] = v;
      std::vector<Vertex> gamma(n_);
      for (Vertex v = 0; v < n_; ++v) gamma[v] = inv[pos[v]];
      automorphisms_.push_back(std::move(gamma));
    };
    if (cert == first_cert_) {
      record_automorphism(first_pos_);
    } else if (cert == best_cert_) {
      record_automorphism(best_pos_);
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_pos_ = std::move(pos);
    }
  }

  // Orbit representative of v under automorphisms fixing every vertex of prefix.
  Vertex orbit_root(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  std::vector<Vertex> stabiliser_orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = orbit_root(parent, v), b = orbit_root(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = orbit_root(parent, v);
    return parent;
  }

  void search(Cells cells, std::vector<Vertex>& prefix) {
    refine(adj_, cells);
    if (cells.size() == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;

    const std::vector<Vertex> members = cells[target];
    std::vector<Vertex> tried;
    for (Vertex v : members) {
      if (!tried.empty()) {
        auto orbits = stabiliser_orbits(prefix);
        bool equivalent = std::any_of(tried.begin(), tried.end(),
                                      [&](Vertex u) { return orbits[u] == orbits[v]; });
        if (equivalent) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : cells[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
      tried.push_back(v);
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<Vertex> best_pos_, first_pos_;
  std::vector<std::uint64_t> best_cert_, first_cert_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

/// Canonical relabelling: vertex v of g moves to position result[v].
inline std::vector<Vertex> canonical_labelling(const Graph& g) {
  if (g.n() > kCoreWidth) throw std::length_error("canonical_labelling: graph exceeds 64 vertices");
  return detail::CanonSearch(g).run();
}

/// Canonically relabelled copy of g (labels dropped).
inline Graph canonical_form(const Graph& g) {
  auto pos = canonical_labelling(g);
  return strip_labels(permute(g, pos));
}

inline CanonKey canonical_key(const Graph& g) {
  const auto pos = canonical_labelling(g);
  const std::size_t n = g.n();
  std::vector<std::uint64_t> rows(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (std::uint64_t m = g.row64(v); m; m &= m - 1)
      rows[pos[v]] |= std::uint64_t{1} << pos[std::countr_zero(m)];
  CanonKey key;
  key.bytes.push_back(static_cast<char>(n));
  unsigned char acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>((acc << 1) | ((rows[i] >> j) & 1u));
      if (++filled == 8) {
        key.bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) key.bytes.push_back(static_cast<char>(acc << (8 - filled)));
  return key;
}

/// Rebuilds the canonical representative encoded in a key.
inline Graph graph_from_key(const CanonKey& key) {
  const std::size_t n = key.order();
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      auto byte = static_cast<unsigned char>(key.bytes[1 + bit / 8]);
      if ((byte >> (7 - bit % 8)) & 1u) g.add_edge(i, j);
    }
  return g;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b);
}

}  // namespace primeage
