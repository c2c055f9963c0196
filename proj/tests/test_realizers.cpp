#include <gtest/gtest.h>

#include <random>

#include <numeric>

#include "primeage/canon.hpp"
#include "primeage/realizers.hpp"
#include "primeage/word_graphs.hpp"

using namespace primeage;

namespace {

std::string random_bits(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, '0');
  for (auto& c : s) c = (rng() & 1u) ? '1' : '0';
  return s;
}

}  // namespace

TEST(BuildRealizer, EmptyWord) {
  const Realizer r = build_realizer("");
  EXPECT_EQ(r.first, (LinearOrder{-1}));
  EXPECT_EQ(r.second, (LinearOrder{-1}));
}

TEST(BuildRealizer, SingleEdge) {
  const Realizer r = build_realizer("1");
  EXPECT_TRUE(validate_realizer(r, graph_of_bits("1")));
  EXPECT_EQ(strip_labels(comparability_graph(intersection_order(r))), make::clique(2));
}

TEST(BuildRealizer, AllWordsUpToLengthTenValidateWithExtremalSteps) {
  for (std::size_t len = 0; len <= 10; ++len)
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      std::string w(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if ((code >> i) & 1u) w[i] = '1';
      const Realizer r = build_realizer(w, [&](const Realizer& step, Label newest) {
        ASSERT_TRUE(is_extremal(step, newest)) << w;
      });
      ASSERT_TRUE(validate_realizer(r, graph_of_bits(w))) << w;
    }
}

TEST(BuildRealizer, LongRandomWords) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string w = random_bits(rng, 11 + trial % 50);
    ASSERT_TRUE(validate_realizer(build_realizer(w), graph_of_bits(w))) << w;
  }
}

TEST(BuildRealizer, RejectsNonBinaryLetters) { EXPECT_THROW(build_realizer("012"), std::invalid_argument); }

TEST(ValidateRealizer, EqualOrdersGiveACompleteGraph) {
  const LinearOrder o{3, 1, 2, 0};
  Graph k = make::clique(4);
  k.set_labels({0, 1, 2, 3});
  EXPECT_TRUE(validate_realizer({o, o}, k));
}

TEST(ValidateRealizer, OppositeOrdersGiveNoEdges) {
  const LinearOrder o{0, 1, 2, 3}, rev{3, 2, 1, 0};
  Graph e(4);
  e.set_labels({0, 1, 2, 3});
  EXPECT_TRUE(validate_realizer({o, rev}, e));
  EXPECT_FALSE(validate_realizer({o, o}, e));
}

TEST(ValidateRealizer, VertexSetMismatchThrows) {
  Graph e(3);
  e.set_labels({0, 1, 2});
  EXPECT_THROW(validate_realizer({{0, 1, 5}, {0, 1, 5}}, e), std::invalid_argument);
}

TEST(ValidateRealizer, PathFromAllOnes) {
  EXPECT_TRUE(validate_realizer(build_realizer("1111"), graph_of_bits("1111")));
}

TEST(IntersectionOrder, Examples) {
  const Poset chain = intersection_order({{1, 2, 3}, {1, 2, 3}});
  EXPECT_TRUE(chain.is_strict_order());
  EXPECT_TRUE(chain.less[0][1] && chain.less[1][2] && chain.less[0][2]);

  const Poset anti = intersection_order({{1, 2, 3}, {3, 2, 1}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_FALSE(anti.less[i][j]);

  const Poset p = intersection_order({{1, 2, 3}, {2, 1, 3}});
  EXPECT_FALSE(p.comparable(0, 1));
  EXPECT_TRUE(p.comparable(0, 2));
  EXPECT_TRUE(p.comparable(1, 2));
}

TEST(RelationGraphs, ChainAntichainAndMixed) {
  const Poset chain = intersection_order({{1, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(strip_labels(comparability_graph(chain)), make::clique(3));
  EXPECT_EQ(incomparability_graph(chain).edge_count(), 0u);

  EXPECT_EQ(comparability_graph(intersection_order({{1, 2, 3}, {3, 2, 1}})).edge_count(), 0u);

  const Graph comp = comparability_graph(intersection_order({{1, 2, 3}, {2, 1, 3}}));
  EXPECT_EQ(comp.labels(), (std::vector<Label>{1, 2, 3}));
  EXPECT_EQ(comp.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 2}}));
}

TEST(RelationGraphs, AreComplementary) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    LinearOrder a(1 + trial % 12);
    std::iota(a.begin(), a.end(), Label{0});
    LinearOrder b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Poset p = intersection_order({a, b});
    Graph inc = complement(incomparability_graph(p));
    inc.set_labels(p.elements);
    ASSERT_EQ(comparability_graph(p), inc);
  }
}

TEST(Permutation, Examples) {
  EXPECT_EQ(bichain_to_permutation({{1, 2, 3}, {1, 2, 3}}), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(bichain_to_permutation({{1, 2, 3}, {3, 2, 1}}), (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_EQ(bichain_to_permutation({{1, 2, 3}, {2, 1, 3}}), (std::vector<std::size_t>{2, 1, 3}));
}

TEST(Permutation, RoundTripAndReversedPairs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    LinearOrder a(1 + trial % 10);
    std::iota(a.begin(), a.end(), Label{-1});
    LinearOrder b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Bichain bc{a, b};
    const auto sigma = bichain_to_permutation(bc);
    ASSERT_TRUE(bichains_isomorphic(permutation_to_bichain(sigma), bc));
    // Reversed pairs of sigma are the incomparable pairs.
    const Graph pg = strip_labels(permutation_graph(sigma));
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = i + 1; j < sigma.size(); ++j)
        ASSERT_EQ(pg.adjacent(sigma[i] - 1, sigma[j] - 1), sigma[i] > sigma[j]);
  }
}

TEST(Permutation, WordGraphsArePermutationGraphs) {
  // The incomparability graph of the realizer is the complement of G_w,
  // so G_w is the permutation graph of sigma read against the reversed first order.
  for (const std::string w : {"1", "10", "0110100", "1111", "0000", "0100101001001"}) {
    const Realizer r = build_realizer(w);
    const Graph g = graph_of_bits(w);
    Bichain flipped = r;
    std::reverse(flipped.first.begin(), flipped.first.end());
    const auto sigma = bichain_to_permutation(flipped);
    EXPECT_TRUE(isomorphic(permutation_graph(sigma), g)) << w;
  }
}

TEST(Restriction, SubsetsOfValidatedRealizersStillValidate) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string w = random_bits(rng, 1 + trial % 30);
    const Graph g = graph_of_bits(w);
    const Realizer r = build_realizer(w);
    std::vector<Label> keep;
    std::vector<Vertex> idx;
    for (Vertex v = 0; v < g.n(); ++v)
      if (rng() % 3) {
        keep.push_back(g.label(v));
        idx.push_back(v);
      }
    ASSERT_TRUE(validate_realizer(restrict_realizer(r, keep), induced_subgraph(g, idx)));
  }
}
