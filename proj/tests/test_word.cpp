#include <gtest/gtest.h>

#include "galcov/word.hpp"

using namespace galcov;

namespace {
const std::vector<std::string> kNames = {"G1", "G1p", "G2", "G12"};
}

TEST(Word, FreeReduceCancelsNestedPairs) {
  EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), (Word{3}));
  EXPECT_TRUE(free_reduce({1, 2, -2, -1}).empty());
}

TEST(Word, CyclicReduce) {
  EXPECT_EQ(cyclic_reduce({-1, 2, 3, 1}), (Word{2, 3}));
}

TEST(Word, CommutatorAndBraidRelator) {
  EXPECT_EQ(commutator({1}, {2}), (Word{1, 2, -1, -2}));
  EXPECT_EQ(braid_relator({1}, {2}), (Word{1, 2, 1, -2, -1, -2}));
}

TEST(Word, ConjugateIsBInverseAB) {
  EXPECT_EQ(conjugate({1}, {2}), (Word{-2, 1, 2}));
}

TEST(Word, ParseLongestMatch) {
  EXPECT_EQ(parse_word("G12 G1p G1", kNames), (Word{4, 2, 1}));
  EXPECT_EQ(parse_word("G1G1p", kNames), (Word{1, 2}));
}

TEST(Word, ParsePowersAndParentheses) {
  EXPECT_EQ(parse_word("G1^-2", kNames), (Word{-1, -1}));
  EXPECT_EQ(parse_word("(G1 G2)^2", kNames), (Word{1, 3, 1, 3}));
  EXPECT_EQ(parse_word("(G1 G2)^-1", kNames), (Word{-3, -1}));
}

TEST(Word, ParseMacrosAndEquality) {
  EXPECT_EQ(parse_word("[G1, G2]", kNames), commutator({1}, {3}));
  EXPECT_EQ(parse_word("<G1, G2^-1 G1p G2>", kNames), braid_relator({1}, {-3, 2, 3}));
  EXPECT_EQ(parse_word("G1 = G1p", kNames), (Word{1, -2}));
  EXPECT_TRUE(parse_word("1", kNames).empty());
  EXPECT_EQ(parse_word("G1^-2 = G2^2", kNames), (Word{-1, -1, -3, -3}));
}

TEST(Word, ParseRejectsGarbage) {
  EXPECT_THROW(parse_word("G3", kNames), StructuralError);
  EXPECT_THROW(parse_word("(G1", kNames), StructuralError);
  EXPECT_THROW(parse_word("G1 = G2 = G1p", kNames), StructuralError);
}

TEST(Word, FormatRoundTrip) {
  const Word w = {1, -3, -3, 4, 2};
  EXPECT_EQ(parse_word(format_word(w, kNames), kNames), w);
}

TEST(Word, RelatorCanonicalIdentifiesRotationsAndInverses) {
  const Word w = {1, 2, -3};
  EXPECT_EQ(relator_canonical(w), relator_canonical({2, -3, 1}));
  EXPECT_EQ(relator_canonical(w), relator_canonical(inverse(w)));
}

TEST(Word, SubstituteAndExponentSums) {
  const Word w = {1, 2, -1};
  EXPECT_EQ(substitute(w, {{3}, {3, 3}, {}}), (Word{3, 3}));
  EXPECT_EQ(exponent_sums({1, 1, -2, 3}, 3), (std::vector<std::int64_t>{2, -1, 1}));
}
