#include <gtest/gtest.h>

#include <random>

#include "braidwire/braid.hpp"
#include "support/artin_action.hpp"
#include "support/handle_reduction.hpp"
#include "support/random_words.hpp"

using namespace braidwire;
using namespace braidwire::testing;

TEST(HandleReduction, KnownWords) {
  EXPECT_TRUE(trivial_by_handles({}));
  EXPECT_TRUE(trivial_by_handles({1, -1}));
  EXPECT_TRUE(trivial_by_handles({1, 2, 1, -2, -1, -2}));
  EXPECT_FALSE(trivial_by_handles({1}));
  EXPECT_FALSE(trivial_by_handles({1, 2, -1, -2}));
  // s1' s2 s2 s1 = s2 s1 s1 s2'
  EXPECT_TRUE(trivial_by_handles({-1, 2, 2, 1, 2, -1, -1, -2}));
}

// Three oracles on the same words: handle reduction, the Artin action and
// the normal form.
TEST(HandleReduction, AgreesWithArtinAndNormalForm) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    auto a = random_word(rng, n, static_cast<int>(rng() % 9));
    auto b = t % 2 ? insert_relation(rng, a) : random_word(rng, n, static_cast<int>(rng() % 9));
    auto w = to_signed(a);
    for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) w.push_back(-it->sign * it->gen);
    const bool handles = trivial_by_handles(w);
    EXPECT_EQ(handles, artin_equal(a, b)) << to_text(a) << " vs " << to_text(b);
    EXPECT_EQ(handles, equal(a, b)) << to_text(a) << " vs " << to_text(b);
  }
}

TEST(SimpleData, PrefixAndSuffixSets) {
  auto d = simple_data(3, {1, 2});
  ASSERT_TRUE(d.simple);
  EXPECT_EQ(d.starting, (std::vector<int>{1}));
  EXPECT_EQ(d.finishing, (std::vector<int>{2}));
  auto delta = simple_data(3, {1, 2, 1});
  EXPECT_EQ(delta.crossings, 3u);
  EXPECT_EQ(delta.starting, (std::vector<int>{1, 2}));
  EXPECT_FALSE(simple_data(3, {1, 1}).simple);
  EXPECT_FALSE(simple_data(3, {-1}).simple);
}
