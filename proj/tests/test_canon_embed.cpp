#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "primeage/canon.hpp"
#include "primeage/embed.hpp"
#include "primeage/generate.hpp"
#include "primeage/oracles.hpp"

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

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(g, perm);
}

}  // namespace

TEST(CanonicalKey, PathOnFourVerticesIsSelfComplementary) {
  EXPECT_EQ(canonical_key(make::path(4)), canonical_key(complement(make::path(4))));
}

TEST(CanonicalKey, TriangleDiffersFromPath) {
  EXPECT_NE(canonical_key(make::clique(3)), canonical_key(make::path(3)));
}

TEST(CanonicalKey, RotatedPentagon) {
  const Graph c5 = make::cycle(5);
  const std::vector<Vertex> rotation{1, 2, 3, 4, 0};
  EXPECT_EQ(canonical_key(c5), canonical_key(permute(c5, rotation)));
}

TEST(CanonicalKey, TooLargeThrows) { EXPECT_THROW(canonical_key(make::path(65)), std::length_error); }

TEST(CanonicalKey, AgreesWithBruteForceIsomorphismUpToSixVertices) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<Graph> sample;
    for (int i = 0; i < 40; ++i) sample.push_back(random_graph(rng, n, 0.5));
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = i; j < sample.size(); ++j)
        ASSERT_EQ(canonical_key(sample[i]) == canonical_key(sample[j]), oracle::isomorphic(sample[i], sample[j]))
            << "n=" << n;
  }
}

TEST(CanonicalKey, InvariantUnderRelabellingOfLargerGraphs) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 10 + trial % 50, trial % 2 ? 0.2 : 0.5);
    const Graph h = shuffled(g, rng);
    ASSERT_EQ(canonical_key(g), canonical_key(h));
    ASSERT_EQ(canonical_form(g), canonical_form(h));
    ASSERT_EQ(graph_from_key(canonical_key(g)), canonical_form(g));
  }
}

TEST(CanonicalKey, RegularGraphsAreSeparated) {
  // Both 3-regular on 6 vertices: the prism and K_{3,3}.
  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_NE(canonical_key(prism), canonical_key(make::complete_bipartite(3, 3)));
  EXPECT_FALSE(isomorphic(prism, make::complete_bipartite(3, 3)));
  // Petersen graph vs a relabelled copy.
  Graph petersen(10);
  for (Vertex i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  std::mt19937_64 rng(3);
  EXPECT_TRUE(isomorphic(petersen, shuffled(petersen, rng)));
}

TEST(Generate, ClassCountsMatchKnownSequence) {
  const auto all = graphs_up_to(7);
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(all[n].size(), expected[n]) << "n=" << n;
}

TEST(Embeds, PathIntoLongerPath) { EXPECT_TRUE(embeds(make::path(3), make::path(4))); }

TEST(Embeds, TriangleNotInPentagon) { EXPECT_FALSE(embeds(make::clique(3), make::cycle(5))); }

TEST(Embeds, EmptyGraphEmbedsEverywhere) {
  EXPECT_TRUE(embeds(Graph(0), Graph(0)));
  EXPECT_TRUE(embeds(Graph(0), make::clique(4)));
}

TEST(Embeds, InducedNotMerelySubgraph) {
  EXPECT_FALSE(embeds(make::path(3), make::clique(3)));
  EXPECT_FALSE(embeds(make::cycle(4), make::clique(4)));
}

TEST(Embeds, AgreesWithSubsetEnumerationUpToEightVertices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_graph(rng, 1 + trial % 8, 0.5);
    const Graph h = random_graph(rng, 1 + (trial / 8) % 5, 0.5);
    const auto emb = find_embedding(h, g);
    ASSERT_EQ(emb.has_value(), oracle::embeds(h, g));
    if (emb) ASSERT_TRUE(is_induced_embedding(h, g, *emb));
  }
}

TEST(Embeds, ReflexiveTransitiveAndAntisymmetricOnClasses) {
  const auto all = graphs_up_to(4);
  std::vector<Graph> flat;
  for (const auto& level : all) flat.insert(flat.end(), level.begin(), level.end());
  for (const auto& a : flat) {
    EXPECT_TRUE(embeds(a, a));
    for (const auto& b : flat) {
      if (embeds(a, b) && embeds(b, a)) EXPECT_EQ(canonical_key(a), canonical_key(b));
      if (!embeds(a, b)) continue;
      for (const auto& c : flat)
        if (embeds(b, c)) EXPECT_TRUE(embeds(a, c));
    }
  }
}

TEST(Embeds, WorksBeyondOneWord) {
  const Graph big = make::cycle(100);
  EXPECT_TRUE(embeds(make::path(40), big));
  EXPECT_FALSE(embeds(make::clique(3), big));
  const auto emb = find_embedding(make::path(70), big);
  ASSERT_TRUE(emb);
  EXPECT_TRUE(is_induced_embedding(make::path(70), big, *emb));
}
