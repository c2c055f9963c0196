#include <gtest/gtest.h>

#include <random>

#include "primeage/graph.hpp"

using namespace primeage;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST(Graph, AdjacencyIsSymmetricAndLoopFree) {
  Graph g(5, {{0, 1}, {3, 1}});
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(2, 2));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 5), std::out_of_range);
}

TEST(Graph, LabelsMustBeDistinctAndComplete) {
  Graph g(3);
  EXPECT_THROW(g.set_labels({-1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(g.set_labels({-1, 0}), std::invalid_argument);
  g.set_labels({-1, 0, 1});
  EXPECT_EQ(g.label(0), -1);
  EXPECT_EQ(g.index_of(1), std::optional<Vertex>(2));
  EXPECT_FALSE(g.index_of(7).has_value());
}

TEST(Graph, WideGraphsUseSeveralWords) {
  Graph g = make::path(130);
  EXPECT_EQ(g.row_words(), 3u);
  EXPECT_EQ(g.edge_count(), 129u);
  EXPECT_TRUE(g.adjacent(63, 64));
  EXPECT_TRUE(g.adjacent(128, 129));
  EXPECT_EQ(complement(complement(g)), g);
}

TEST(InducedSubgraph, KeepsAnEdgeOfAPath) {
  const Graph h = induced_subgraph(make::path(4), {0, 1});
  EXPECT_EQ(h, make::clique(2));
}

TEST(InducedSubgraph, EmptySelection) { EXPECT_EQ(induced_subgraph(make::path(4), {}).n(), 0u); }

TEST(InducedSubgraph, OppositeCornersOfASquare) {
  const Graph h = induced_subgraph(make::cycle(4), {0, 2});
  EXPECT_EQ(h.n(), 2u);
  EXPECT_EQ(h.edge_count(), 0u);
}

TEST(InducedSubgraph, OutOfRangeVertexThrows) {
  EXPECT_THROW(induced_subgraph(make::path(4), {0, 4}), std::out_of_range);
}

TEST(InducedSubgraph, RestrictsLabels) {
  Graph g = make::path(4);
  g.set_labels({-1, 0, 1, 2});
  const Graph h = induced_subgraph(g, {1, 3});
  EXPECT_EQ(h.labels(), (std::vector<Label>{0, 2}));
}

TEST(Complement, TriangleBecomesEdgeless) {
  const Graph c = complement(make::clique(3));
  EXPECT_EQ(c.n(), 3u);
  EXPECT_EQ(c.edge_count(), 0u);
}

TEST(Complement, EmptyGraph) { EXPECT_EQ(complement(Graph(0)), Graph(0)); }

TEST(Complement, PathOnFourVertices) {
  const Graph c = complement(make::path(4));
  EXPECT_EQ(c.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {0, 3}, {1, 3}}));
}

TEST(Complement, IsAnInvolutionAndCommutesWithInducedSubgraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 70;
    const Graph g = random_graph(rng, n, 0.3 + 0.4 * (trial % 3) / 2.0);
    EXPECT_EQ(complement(complement(g)), g);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (rng() & 1u) keep.push_back(v);
    EXPECT_EQ(complement(induced_subgraph(g, keep)), induced_subgraph(complement(g), keep));
  }
}

TEST(LineGraph, PathShortensByOne) { EXPECT_EQ(line_graph(make::path(4)), make::path(3)); }

TEST(LineGraph, TriangleIsItsOwnLineGraph) { EXPECT_EQ(line_graph(make::clique(3)), make::clique(3)); }

TEST(LineGraph, NoEdgesGivesEmptyGraph) { EXPECT_EQ(line_graph(Graph(5)).n(), 0u); }

TEST(Make, StandardFamilies) {
  EXPECT_EQ(make::path(5).edge_count(), 4u);
  EXPECT_EQ(make::path(5).n(), 5u);
  const Graph k23 = make::complete_bipartite(2, 3);
  EXPECT_EQ(k23.n(), 5u);
  EXPECT_EQ(k23.edge_count(), 6u);
  EXPECT_FALSE(k23.adjacent(0, 1));
  EXPECT_FALSE(k23.adjacent(2, 4));
  EXPECT_EQ(make::clique(1).n(), 1u);
  EXPECT_EQ(make::clique(1).edge_count(), 0u);
  EXPECT_EQ(make::cycle(5).edge_count(), 5u);
  EXPECT_EQ(make::empty(4).edge_count(), 0u);
  EXPECT_EQ(make::star(3).degree(0), 3u);
}

TEST(Graph, DisjointUnionAndPermute) {
  const Graph u = disjoint_union(make::clique(2), make::path(3));
  EXPECT_EQ(u.n(), 5u);
  EXPECT_EQ(u.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}, {3, 4}}));
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph p = permute(make::path(3), perm);
  EXPECT_EQ(p.edge_count(), 2u);
  EXPECT_EQ(p.degree(perm[1]), 2u);
}
