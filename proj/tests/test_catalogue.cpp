#include <gtest/gtest.h>

#include "primeage/catalogue.hpp"
#include "primeage/oracles.hpp"

using namespace primeage;

TEST(SubdividedStar, SmallMembers) {
  EXPECT_TRUE(isomorphic(subdivided_star(1), make::path(3)));
  EXPECT_TRUE(isomorphic(subdivided_star(2), make::path(5)));
  const Graph spider = subdivided_star(3);
  EXPECT_EQ(spider.n(), 7u);
  EXPECT_EQ(spider.edge_count(), 6u);
  EXPECT_EQ(spider.degree(0), 3u);
}

TEST(LineOfK2n, SmallMembers) {
  EXPECT_TRUE(isomorphic(line_of_k2n(1), make::clique(2)));
  EXPECT_TRUE(isomorphic(line_of_k2n(2), make::cycle(4)));
  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_TRUE(isomorphic(line_of_k2n(3), prism));
}

TEST(LineOfSubdividedStar, SmallMembers) {
  EXPECT_TRUE(isomorphic(line_of_subdivided_star(1), make::clique(2)));
  EXPECT_TRUE(isomorphic(line_of_subdivided_star(2), make::path(4)));
  const Graph net(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_TRUE(isomorphic(line_of_subdivided_star(3), net));
}

TEST(HalfGraph, SmallMembers) {
  EXPECT_TRUE(isomorphic(half_graph(1), make::clique(2)));
  const Graph h2 = half_graph(2);
  // u1 = 0, u2 = 1, v1 = 2, v2 = 3.
  EXPECT_EQ(h2.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_TRUE(isomorphic(h2, make::path(4)));
  const Graph h3 = half_graph(3);
  EXPECT_EQ(h3.n(), 6u);
  EXPECT_EQ(h3.edge_count(), 6u);
}

TEST(ChainWordPrime, Examples) {
  const auto ones = chain_word_prime(3, Word::constant('1'));
  EXPECT_TRUE(isomorphic(ones.graph, make::path(4)));
  EXPECT_TRUE(ones.prime);
  const auto fib = chain_word_prime(6);
  EXPECT_EQ(fib.prime, oracle::is_prime(fib.graph));
  EXPECT_EQ(chain_word_prime(0).graph.n(), 1u);
}

TEST(Catalogue, ZeroParameterIsRejected) {
  EXPECT_THROW(subdivided_star(0), std::invalid_argument);
  EXPECT_THROW(line_of_k2n(0), std::invalid_argument);
  EXPECT_THROW(line_of_subdivided_star(0), std::invalid_argument);
  EXPECT_THROW(half_graph(0), std::invalid_argument);
}

TEST(Catalogue, NamesRoundTrip) {
  for (Family f : kFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("triangle"), std::invalid_argument);
}

TEST(Catalogue, FamiliesAreMonotone) {
  for (Family f : {Family::subdivided_star, Family::line_of_k2n, Family::line_of_subdivided_star, Family::half_graph})
    for (std::size_t n = 1; n < 8; ++n)
      ASSERT_TRUE(embeds(family_member(f, n), family_member(f, n + 1))) << family_name(f) << " n=" << n;
}

TEST(Catalogue, PrimalityOfMembers) {
  // Members with at least four vertices are prime, except the line graph of
  // K_{2,2}, which is a 4-cycle.
  for (std::size_t n = 1; n <= 8; ++n) {
    for (Family f : {Family::subdivided_star, Family::line_of_k2n, Family::line_of_subdivided_star,
                     Family::half_graph}) {
      const Graph g = family_member(f, n);
      if (g.n() < 4) continue;
      const bool expected = !(f == Family::line_of_k2n && n == 2);
      EXPECT_EQ(is_prime(g), expected) << family_name(f) << " n=" << n;
      EXPECT_EQ(is_prime(complement(g)), expected);
    }
  }
}

TEST(Detect, HalfGraphContainsSmallerHalfGraph) {
  const auto hits = detect_unavoidable(half_graph(5), 3);
  EXPECT_NE(std::find(hits.begin(), hits.end(), FamilyHit{Family::half_graph, false, {}}), hits.end());
}

TEST(Detect, LongPathContainsAllOnesChain) {
  const auto hits = detect_unavoidable(make::path(20), 3, Word::constant('1'));
  EXPECT_NE(std::find(hits.begin(), hits.end(), FamilyHit{Family::chain_word_prime, false, {}}), hits.end());
}

TEST(Detect, CliqueOnlyContainsCliques) {
  // The complement of P_3 is K_2 + K_1, which is not an induced subgraph of K_5.
  const auto hits = detect_unavoidable(make::clique(5), 1);
  for (const auto& h : hits) {
    Graph pattern = family_member(h.family, 1);
    if (h.complemented) pattern = complement(pattern);
    EXPECT_EQ(pattern.edge_count(), pattern.n() * (pattern.n() - 1) / 2);
  }
  EXPECT_EQ(std::find(hits.begin(), hits.end(), FamilyHit{Family::subdivided_star, true, {}}), hits.end());
  EXPECT_NE(std::find(hits.begin(), hits.end(), FamilyHit{Family::line_of_k2n, false, {}}), hits.end());
}

TEST(Detect, HitsRevalidate) {
  for (const Graph& g : {half_graph(6), line_of_k2n(4), subdivided_star(5), chain_word_prime(20).graph}) {
    for (const auto& hit : detect_unavoidable(g, 3)) {
      Graph pattern = hit.family == Family::chain_word_prime ? chain_word_prime(3).graph : family_member(hit.family, 3);
      if (hit.complemented) pattern = complement(pattern);
      ASSERT_TRUE(is_induced_embedding(pattern, g, hit.embedding));
    }
  }
}
