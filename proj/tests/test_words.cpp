#include <gtest/gtest.h>

#include "primeage/words.hpp"

using namespace primeage;

namespace {

std::set<std::string> set_of(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Factors, PeriodTwo) {
  EXPECT_EQ(factors(Word::periodic("01"), 2, 6).factors, set_of({"01", "10"}));
}

TEST(Factors, ConstantWord) { EXPECT_EQ(factors(Word::constant('1'), 3, 10).factors, set_of({"111"})); }

TEST(Factors, FibonacciNeverHasTwoOnes) {
  EXPECT_EQ(factors(Word::fibonacci(), 2, 13).factors, set_of({"00", "01", "10"}));
}

TEST(Factors, LengthBeyondPrefixThrows) {
  EXPECT_THROW(factors(Word::fibonacci(), 11, 10), std::invalid_argument);
}

TEST(Mechanical, RationalSlopes) {
  EXPECT_EQ(mechanical_word(Rational::parse("1/2")).prefix(6), "010101");
  EXPECT_EQ(mechanical_word(Rational::parse("1/3")).prefix(6), "001001");
  EXPECT_EQ(mechanical_word(Rational::parse("2/4")).prefix(6), "010101");
}

TEST(Mechanical, SlopeMustLieStrictlyBetweenZeroAndOne) {
  EXPECT_THROW(mechanical_word(Rational::parse("3/2")), std::invalid_argument);
  EXPECT_THROW(mechanical_word(Rational::parse("0/1")), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Mechanical, GoldenSlopeMatchesTheFibonacciSubstitution) {
  const auto cf = ContinuedFraction::parse("0;2,(1)");
  const std::string fib = Word::fibonacci().prefix(1000);
  EXPECT_EQ(Word::characteristic(cf).prefix(1000), fib);
  // With intercept 0 the same slope gives the same word shifted by one letter.
  EXPECT_EQ(Word(word_kind::Mechanical{cf, {}, false}).prefix(1001), "0" + fib);
}

TEST(ContinuedFraction, ParseAndConvergents) {
  const auto cf = ContinuedFraction::parse("0;2,(1)", 6);
  EXPECT_EQ(cf.quotient(0), 0u);
  EXPECT_EQ(cf.quotient(1), 2u);
  EXPECT_EQ(cf.quotient(5), 1u);
  // Depth counts the quotients after the semicolon: [0;2,1,1,1,1,1].
  EXPECT_EQ(cf.convergent().str(), "8/21");
  EXPECT_EQ(ContinuedFraction::parse("0;3").convergent().str(), "1/3");
  EXPECT_THROW(ContinuedFraction::parse("2"), std::invalid_argument);
  EXPECT_THROW(ContinuedFraction::parse("0;2,0"), std::invalid_argument);
  EXPECT_THROW(ContinuedFraction::parse("0;2,(1"), std::invalid_argument);
}

TEST(Substitution, FibonacciAndThueMorse) {
  EXPECT_EQ(substitution_word("01", "0").prefix(13), "0100101001001");
  EXPECT_EQ(Word::thue_morse().prefix(8), "01101001");
}

TEST(Substitution, NonGrowingRulesAreRejected) {
  EXPECT_THROW(substitution_word("0", "1"), std::invalid_argument);
  EXPECT_THROW(substitution_word("10", "0"), std::invalid_argument);  // seed 0 is not a prefix of its image
  EXPECT_THROW(substitution_word("", "1"), std::invalid_argument);
}

TEST(Words, PrefixesAreCoherentForEveryGenerator) {
  const std::vector<Word> words{Word::bits("0110100110"),
                                Word::periodic("011"),
                                Word::fibonacci(),
                                Word::thue_morse(),
                                mechanical_word(Rational::parse("3/7"), Rational::parse("1/5")),
                                Word::characteristic(ContinuedFraction::parse("0;3,(1)")),
                                substitution_word("001", "1")};
  for (const auto& w : words) {
    const std::size_t top = w.finite_length().value_or(10000);
    const std::string full = w.prefix(top);
    for (std::size_t n : {0ul, 1ul, 7ul, 100ul, 999ul, 4321ul, top})
      if (n <= top) ASSERT_EQ(w.prefix(n), full.substr(0, n));
    ASSERT_EQ(full.find_first_not_of("01"), std::string::npos);
  }
  EXPECT_THROW(Word::bits("0110").prefix(5), std::out_of_range);
  EXPECT_THROW(Word::bits("0120"), std::invalid_argument);
}

TEST(Words, ComplementAndReversal) {
  EXPECT_EQ(complement_bits("0110"), "1001");
  EXPECT_EQ(reverse_star(Word::bits("0110"), 4).prefix(4), "0110");
  EXPECT_EQ(reverse_star(Word::bits("100"), 3).prefix(3), "001");
  const Word fib = Word::fibonacci();
  EXPECT_EQ(complement_word(complement_word(fib)).prefix(500), fib.prefix(500));
  EXPECT_EQ(reverse_star(reverse_star(fib, 77), 77).prefix(77), fib.prefix(77));
}

TEST(Recurrence, PeriodTwoWord) {
  // Every window of length 3 of 0101... contains both 01 and 10.
  EXPECT_EQ(recurrence_bound(Word::periodic("01"), 2, 100), std::optional<std::size_t>(3));
}

TEST(Recurrence, ConstantWord) {
  EXPECT_EQ(recurrence_bound(Word::constant('1'), 1, 10), std::optional<std::size_t>(1));
}

TEST(Recurrence, FactorThatNeverRecurs) {
  const Word w = Word::bits("100" + std::string(997, '1'));
  EXPECT_FALSE(recurrence_bound(w, 2, 1000).has_value());
}

TEST(Recurrence, FibonacciBoundsExistAndGrow) {
  const std::string p = Word::fibonacci().prefix(100000);
  std::size_t previous = 0;
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto m = recurrence_bound_of(p, n);
    ASSERT_TRUE(m) << "n=" << n;
    ASSERT_GE(*m, previous);
    previous = *m;
  }
}

TEST(Recurrence, EveryLongWindowSeesEveryFactor) {
  for (const Word& w : {Word::fibonacci(), Word::thue_morse(), Word::periodic("0010111")}) {
    const std::string p = w.prefix(2000);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto m = recurrence_bound_of(p, n);
      ASSERT_TRUE(m);
      const auto all = factors_of(p, n).factors;
      for (std::size_t start = 0; start + *m <= p.size(); start += 37)
        ASSERT_EQ(factors_of(p.substr(start, *m), n).factors, all);
    }
  }
}

TEST(Complexity, Examples) {
  const auto fib = factor_complexity(Word::fibonacci(), 200, 10);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(fib[n - 1], n + 1);
  EXPECT_EQ(factor_complexity(Word::periodic("01"), 40, 8), std::vector<std::size_t>(8, 2));
  EXPECT_EQ(factor_complexity(Word::constant('0'), 40, 8), std::vector<std::size_t>(8, 1));
  EXPECT_THROW(factor_complexity(Word::fibonacci(), 10, 6), std::invalid_argument);
}
