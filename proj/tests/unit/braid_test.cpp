#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "braidwire/braid.hpp"
#include "braidwire/error.hpp"
#include "support/artin_action.hpp"
#include "support/random_words.hpp"

using namespace braidwire;
using braidwire::testing::artin_equal;
using braidwire::testing::insert_relation;
using braidwire::testing::random_word;

namespace {

BraidWord W(int n, std::string_view s) { return parse_word(n, s); }

}  // namespace

TEST(Braid, ComposeBasics) {
  auto w = compose(W(2, "s1"), W(2, "s1'"));
  EXPECT_EQ(w.size(), 2u);
  EXPECT_TRUE(equal(w, BraidWord(2)));
  EXPECT_EQ(compose(BraidWord(3), W(3, "s2 s1")), W(3, "s2 s1"));
  auto d = compose(W(3, "s1 s2"), W(3, "s1"));
  EXPECT_EQ(to_text(d), "s1 s2 s1");
  EXPECT_TRUE(equal(d, half_twist(3, 1, 3)));
  EXPECT_THROW(compose(BraidWord(3), BraidWord(4)), Error);
}

TEST(Braid, HalfTwistStaircase) {
  EXPECT_EQ(to_text(half_twist(4, 1, 4)), "s1 s2 s3 s1 s2 s1");
  EXPECT_EQ(permutation(half_twist(4, 1, 4)), (Permutation{4, 3, 2, 1}));
  EXPECT_TRUE(half_twist(4, 2, 2).empty());
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(exponent_sum(half_twist(n, 1, n)), n * (n - 1) / 2);
    auto p = permutation(half_twist(n + 2, 2, n + 1));
    EXPECT_EQ(p.front(), 1);
    EXPECT_EQ(p[1], n + 1);
    EXPECT_EQ(p.back(), n + 2);
  }
  EXPECT_THROW(half_twist(4, 0, 2), Error);
  EXPECT_THROW(half_twist(4, 3, 5), Error);
}

TEST(Braid, NormalFormExamples) {
  EXPECT_EQ(normal_form(W(3, "s1 s2 s1")), normal_form(W(3, "s2 s1 s2")));
  auto id = normal_form(W(2, "s1 s1'"));
  EXPECT_EQ(id.delta_power, 0);
  EXPECT_TRUE(id.factors.empty());
  auto d = normal_form(half_twist(5, 1, 5));
  EXPECT_EQ(d.delta_power, 1);
  EXPECT_TRUE(d.factors.empty());
  auto dinv = normal_form(invert(half_twist(5, 1, 5)));
  EXPECT_EQ(dinv.delta_power, -1);
  EXPECT_TRUE(dinv.factors.empty());
}

TEST(Braid, EqualExamples) {
  EXPECT_TRUE(equal(W(4, "s1 s3"), W(4, "s3 s1")));
  EXPECT_FALSE(equal(W(3, "s1"), W(3, "s2")));
  // Move (i) front identity.
  EXPECT_TRUE(equal(W(4, "s2"), W(4, "s2 s1' s1")));
  EXPECT_FALSE(equal(W(3, "s1 s2"), W(3, "s2 s1")));
}

TEST(Braid, NormalFormAgreesWithArtinAction) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> nd(2, 6), ld(0, 24);
  for (int t = 0; t < 3000; ++t) {
    const int n = nd(rng);
    auto a = random_word(rng, n, ld(rng));
    // Half of the pairs are equal by construction, the rest are random.
    BraidWord b = (t % 2) ? insert_relation(rng, insert_relation(rng, a)) : random_word(rng, n, ld(rng));
    ASSERT_EQ(normal_form(a) == normal_form(b), artin_equal(a, b))
        << to_text(a) << " | " << to_text(b);
  }
}

TEST(Braid, NormalFormIsLeftGreedyAndRoundTrips) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nd(2, 7), ld(0, 36);
  for (int t = 0; t < 1500; ++t) {
    auto w = random_word(rng, nd(rng), ld(rng));
    auto nf = normal_form(w);
    ASSERT_TRUE(is_left_greedy(nf)) << nf.to_string();
    auto back = to_word(nf);
    ASSERT_TRUE(artin_equal(back, w));
    ASSERT_EQ(normal_form(back), nf);
  }
}

TEST(Braid, InverseProperties) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    auto w = random_word(rng, 5, 20);
    EXPECT_EQ(invert(invert(w)), w);
    EXPECT_TRUE(equal(compose(w, invert(w)), BraidWord(5)));
  }
}

TEST(Braid, PermutationAndExponentSumInvariantUnderRelations) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    auto w = random_word(rng, 6, 15);
    auto v = insert_relation(rng, insert_relation(rng, w));
    ASSERT_TRUE(equal(w, v));
    EXPECT_EQ(permutation(w), permutation(v));
    EXPECT_EQ(exponent_sum(w), exponent_sum(v));
  }
}

TEST(Braid, LinkingMatrixAndConjugation) {
  // Example 3.1 boundary braid.
  BraidWord b = compose(W(4, "s1 s2 s3 s1 s2 s1 s3 s3 s3 s2 s3 s1 s2"),
                        W(4, "s1' s3' s3 s3 s3 s1 s2 s3 s1 s2 s1"));
  // The boundary braid is based at the right edge, where the chart reads A B A B.
  std::vector<std::string> comp{"A", "B", "A", "B"};
  auto lm = linking_matrix(b, comp);
  EXPECT_EQ(lm.lk("A", "B"), 7);
  EXPECT_EQ(lm.lk("B", "A"), 7);
  EXPECT_EQ(exponent_sum(b), 20);
  EXPECT_EQ(cycle_type(permutation(b)), (std::vector<int>{2, 2}));

  auto zero = linking_matrix(BraidWord(4), comp);
  for (auto& row : zero.entries)
    for (auto v : row) EXPECT_EQ(v, 0);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    auto c = random_word(rng, 4, 10);
    auto conj = compose(compose(invert(c), b), c);
    EXPECT_TRUE(conjugate_check(b, conj, c));
    EXPECT_EQ(exponent_sum(conj), exponent_sum(b));
    EXPECT_EQ(cycle_type(permutation(conj)), cycle_type(permutation(b)));
    // The component map moves with the conjugator's permutation.
    auto pc = permutation(c);
    std::vector<std::string> moved(4);
    for (int p = 0; p < 4; ++p) moved[p] = comp[pc[p] - 1];
    EXPECT_EQ(linking_matrix(conj, moved), lm);
  }
  EXPECT_TRUE(conjugate_check(b, b, BraidWord(4)));
  EXPECT_FALSE(conjugate_check(W(3, "s1"), W(3, "s2"), BraidWord(3)));
  EXPECT_TRUE(conjugate_check(W(3, "s1"), W(3, "s2"), W(3, "s2 s1")));
  EXPECT_THROW(linking_matrix(W(2, "s1"), {"A", "B"}), Error);
}

TEST(Braid, TextAndJson) {
  auto w = W(4, "s3 s1' s2");
  EXPECT_EQ(to_text(w), "s3 s1' s2");
  EXPECT_EQ(letters_to_json(w).dump(), "[[3,1],[1,-1],[2,1]]");
  EXPECT_EQ(word_from_json(4, letters_to_json(w)), w);
  EXPECT_THROW(parse_word(3, "s3"), ParseError);
  EXPECT_THROW(parse_word(3, "x1"), ParseError);
  EXPECT_TRUE(parse_word(3, "").empty());
}
