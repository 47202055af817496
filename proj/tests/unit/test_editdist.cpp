#include <random>

#include <gtest/gtest.h>

#include "lexeval/editdist.hpp"
#include "lexeval/text.hpp"
#include "oracles.hpp"

using namespace lexeval;

TEST(EditDistance, Examples) {
  EXPECT_EQ(edit_distance("abc", "abc"), 0u);
  EXPECT_EQ(edit_distance("", "abcd"), 4u);
  EXPECT_EQ(edit_distance("kitten", "sitting"), 3u);
  EXPECT_EQ(edit_distance("REMIXED", "REMIX"), 2u);
}

TEST(EditDistance, MatchesOracleOnKnownPairs) {
  for (auto [a, b] : {std::pair{"kitten", "sitting"}, {"flaw", "lawn"}, {"intention", "execution"}, {"", ""}}) {
    EXPECT_EQ(edit_distance(a, b), oracle::edit_distance(a, b)) << a << " / " << b;
  }
}

TEST(EditDistance, CountsCodepointsNotBytes) {
  EXPECT_EQ(edit_distance("café", "cafe"), 1u);
  EXPECT_EQ(edit_distance("東京", "京都"), 2u);
  EXPECT_DOUBLE_EQ(ned("🎉a", "🎉b"), 0.5);
}

TEST(EditDistance, TableCornerEqualsDistance) {
  const auto a = decode_utf8("kitten");
  const auto b = decode_utf8("sitting");
  const DpTable t = edit_distance_table(a, b);
  EXPECT_EQ(t.rows(), 7u);
  EXPECT_EQ(t.cols(), 8u);
  EXPECT_EQ(t.at(6, 7), 3u);
  for (std::size_t j = 0; j < t.cols(); ++j) EXPECT_EQ(t.at(0, j), j);
}

TEST(Ned, Examples) {
  EXPECT_EQ(ned("abc", "abc"), 0.0);
  EXPECT_EQ(ned("", "abcd"), 1.0);
  EXPECT_EQ(ned("", ""), 0.0);
  EXPECT_DOUBLE_EQ(ned("kitten", "sitting"), 3.0 / 7.0);
  EXPECT_DOUBLE_EQ(ned("REMIXED", "REMIX"), 2.0 / 7.0);
  const NedRatio r = ned_ratio("kitten", "sitting");
  EXPECT_EQ(r.distance, 3u);
  EXPECT_EQ(r.length, 7u);
}

TEST(Ned, PropertiesOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 2000; ++k) {
    const std::string a = oracle::random_string(rng, 7, "abcd");
    const std::string b = oracle::random_string(rng, 7, "abcd");
    const std::string c = oracle::random_string(rng, 7, "abcd");
    const double ab = ned(a, b);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_EQ(ab, ned(b, a));
    EXPECT_EQ(ab == 0.0, a == b);
    EXPECT_LE(edit_distance(a, c), edit_distance(a, b) + edit_distance(b, c));
    EXPECT_EQ(edit_distance(a, b), oracle::edit_distance(a, b));
  }
}
