#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "primeage/graph.hpp"
#include "primeage/words.hpp"

namespace primeage {

/// Raised when an internal construction breaks its own invariant. Always a bug.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Vertex labels listed from least to greatest.
using LinearOrder = std::vector<Label>;

inline bool is_linear_order_on(const LinearOrder& order, std::vector<Label> vertices) {
  LinearOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::sort(vertices.begin(), vertices.end());
  return sorted == vertices && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// A set with two linear orders on it. As a realizer, the pair encodes the
/// intersection order x < y iff x precedes y in both.
struct Bichain {
  LinearOrder first;
  LinearOrder second;

  friend bool operator==(const Bichain&, const Bichain&) = default;
};

using Realizer = Bichain;

/// Finite strict partial order; less[i][j] means elements[i] < elements[j].
struct Poset {
  std::vector<Label> elements;
  std::vector<std::vector<bool>> less;

  std::size_t size() const { return elements.size(); }

  bool comparable(std::size_t i, std::size_t j) const { return less[i][j] || less[j][i]; }

  bool is_strict_order() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (less[i][i]) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (!less[i][j]) continue;
        if (less[j][i]) return false;
        for (std::size_t k = 0; k < n; ++k)
          if (less[j][k] && !less[i][k]) return false;
      }
    }
    return true;
  }
};

namespace detail {

inline std::unordered_map<Label, std::size_t> positions(const LinearOrder& order) {
  std::unordered_map<Label, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

}  // namespace detail

/// o(B): x < y iff x < y in both orders. Elements are listed in increasing label order.
inline Poset intersection_order(const Bichain& b) {
  if (!is_linear_order_on(b.second, b.first) || !is_linear_order_on(b.first, b.first))
    throw std::invalid_argument("intersection_order: orders must be total on the same set");
  Poset p;
  p.elements = b.first;
  std::sort(p.elements.begin(), p.elements.end());
  const auto p1 = detail::positions(b.first), p2 = detail::positions(b.second);
  const std::size_t n = p.elements.size();
  p.less.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Label x = p.elements[i], y = p.elements[j];
      p.less[i][j] = i != j && p1.at(x) < p1.at(y) && p2.at(x) < p2.at(y);
    }
  return p;
}

namespace detail {

inline Graph relation_graph(const Poset& p, bool comparable_edges) {
  Graph g(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.comparable(i, j) == comparable_edges) g.add_edge(i, j);
  g.set_labels(p.elements);
  return g;
}

}  // namespace detail

inline Graph comparability_graph(const Poset& p) { return detail::relation_graph(p, true); }
inline Graph incomparability_graph(const Poset& p) { return detail::relation_graph(p, false); }

/// One-line notation (values 1..n): number the elements 1..n along the first
/// order, then read those numbers along the second order. The pairs reversed
/// by the result are exactly the incomparable pairs of the intersection order.
inline std::vector<std::size_t> bichain_to_permutation(const Bichain& b) {
  if (!is_linear_order_on(b.second, b.first) || !is_linear_order_on(b.first, b.first))
    throw std::invalid_argument("bichain_to_permutation: orders must be total on the same set");
  const auto rank = detail::positions(b.first);
  std::vector<std::size_t> sigma;
  sigma.reserve(b.second.size());
  for (Label x : b.second) sigma.push_back(rank.at(x) + 1);
  return sigma;
}

/// C_sigma: elements 1..n in natural order, second order given by sigma.
inline Bichain permutation_to_bichain(const std::vector<std::size_t>& sigma) {
  Bichain b;
  for (std::size_t i = 1; i <= sigma.size(); ++i) b.first.push_back(static_cast<Label>(i));
  for (auto s : sigma) b.second.push_back(static_cast<Label>(s));
  if (!is_linear_order_on(b.second, b.first)) throw std::invalid_argument("permutation_to_bichain: not a permutation");
  return b;
}

/// Permutation graph of sigma on 1..n: edges are the pairs reversed by sigma.
inline Graph permutation_graph(const std::vector<std::size_t>& sigma) {
  return incomparability_graph(intersection_order(permutation_to_bichain(sigma)));
}

/// Order-preserving bijection in both orders, matching elements by rank in the first order.
inline bool bichains_isomorphic(const Bichain& a, const Bichain& b) {
  if (a.first.size() != b.first.size() || a.second.size() != b.second.size()) return false;
  std::unordered_map<Label, Label> f;
  for (std::size_t i = 0; i < a.first.size(); ++i) f[a.first[i]] = b.first[i];
  for (std::size_t i = 0; i < a.second.size(); ++i) {
    auto it = f.find(a.second[i]);
    if (it == f.end() || it->second != b.second[i]) return false;
  }
  return true;
}

/// True iff the comparability graph of the intersection of r's orders equals
/// g, matching vertices by label.
inline bool validate_realizer(const Realizer& r, const Graph& g) {
  std::vector<Label> vertices;
  for (Vertex v = 0; v < g.n(); ++v) vertices.push_back(g.label(v));
  if (!is_linear_order_on(r.first, vertices) || !is_linear_order_on(r.second, vertices))
    throw std::invalid_argument("validate_realizer: realizer and graph have different vertex sets");
  const Poset p = intersection_order(r);
  if (!p.is_strict_order()) throw InvariantViolation("validate_realizer: intersection of two linear orders is not transitive");
  std::unordered_map<Label, std::size_t> index;
  for (std::size_t i = 0; i < p.size(); ++i) index[p.elements[i]] = i;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      if (g.adjacent(a, b) != p.comparable(index.at(g.label(a)), index.at(g.label(b)))) return false;
  return true;
}

/// Restriction of both orders to a subset of the vertex labels.
inline Realizer restrict_realizer(const Realizer& r, const std::vector<Label>& keep) {
  std::vector<Label> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  auto in = [&](Label x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  Realizer out;
  std::copy_if(r.first.begin(), r.first.end(), std::back_inserter(out.first), in);
  std::copy_if(r.second.begin(), r.second.end(), std::back_inserter(out.second), in);
  return out;
}

/// Incremental realizer construction for word graphs.
///
/// Vertices -1, 0, 1, ... are added one letter at a time. Before each step the
/// newest vertex is extremal in one of the two orders; up to duality it is the
/// maximum of some order L (M is the other one). The new vertex goes directly
/// below that maximum in L and, in M, at the bottom when the letter is 1 (its
/// only edge is to the previous vertex) or at the top when the letter is 0 (its
/// only non-edge is to the previous vertex). It is then extremal in M.
///
/// Duality is tracked as a flag instead of reversing the stored orders; the
/// physical deques are reversed once at the end if the flag is set.
class RealizerBuilder {
public:
  /// Observer sees the realizer (normalised) and the newest label after every step.
  using StepObserver = std::function<void(const Realizer&, Label newest)>;

  RealizerBuilder() {
    orders_[0].push_back(-1);
    orders_[1].push_back(-1);
  }

  void push(char letter) {
    if (letter != '0' && letter != '1') throw std::invalid_argument("build_realizer: letters must be '0' or '1'");
    // Make the newest vertex the logical maximum of orders_[side_].
    dual_ = !at_back_;
    auto& l = orders_[side_];
    auto& m = orders_[1 - side_];
    const Label v = next_;
    if (!dual_) {
      l.insert(l.end() - 1, v);
    } else {
      l.insert(l.begin() + 1, v);
    }
    const bool to_logical_top = letter == '0';
    const bool to_back = to_logical_top != dual_;
    if (to_back) {
      m.push_back(v);
    } else {
      m.push_front(v);
    }
    side_ = 1 - side_;
    at_back_ = to_back;
    ++next_;
    check_extremal();
  }

  Label newest() const { return next_ - 1; }

  Realizer realizer() const {
    Realizer r{{orders_[0].begin(), orders_[0].end()}, {orders_[1].begin(), orders_[1].end()}};
    if (dual_) {
      std::reverse(r.first.begin(), r.first.end());
      std::reverse(r.second.begin(), r.second.end());
    }
    return r;
  }

private:
  void check_extremal() const {
    const auto& o = orders_[side_];
    const Label end = at_back_ ? o.back() : o.front();
    if (end != newest()) throw InvariantViolation("build_realizer: newest vertex is not extremal");
  }

  std::deque<Label> orders_[2];
  std::size_t side_ = 0;   // order in which the newest vertex is extremal
  bool at_back_ = true;    // ...at the physical back (else front)
  bool dual_ = false;
  Label next_ = 0;
};

inline Realizer build_realizer(std::string_view word, const RealizerBuilder::StepObserver& observe = {}) {
  RealizerBuilder b;
  if (observe) observe(b.realizer(), b.newest());
  for (char c : word) {
    b.push(c);
    if (observe) observe(b.realizer(), b.newest());
  }
  return b.realizer();
}

/// Newest vertex is the first or last element of either order.
inline bool is_extremal(const Realizer& r, Label v) {
  auto ends = [v](const LinearOrder& o) { return !o.empty() && (o.front() == v || o.back() == v); };
  return ends(r.first) || ends(r.second);
}

}  // namespace primeage
