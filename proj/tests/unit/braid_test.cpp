#include <gtest/gtest.h>

#include <set>

#include "../support/oracles.hpp"
#include "vbraid/braid.hpp"

using namespace vbraid;

TEST(Word, ParseAndPrint) {
  auto w = parse_word("s1 z2 S1", 3);
  ASSERT_EQ(w.length(), 3u);
  EXPECT_EQ(w.letters()[0], (Generator{GenKind::Sigma, 1}));
  EXPECT_EQ(w.letters()[1], (Generator{GenKind::Zeta, 2}));
  EXPECT_EQ(w.letters()[2], (Generator{GenKind::SigmaInv, 1}));
  EXPECT_EQ(to_string(w), "s1 z2 S1");
  EXPECT_EQ(parse_word("z1 z1", 2).length(), 2u);
  EXPECT_TRUE(parse_word("", 3).empty());
}

TEST(Word, ParseRejectsBadInput) {
  EXPECT_THROW(parse_word("s3", 3), DomainError);
  EXPECT_THROW(parse_word("s0", 3), DomainError);
  EXPECT_THROW(parse_word("q1", 3), DomainError);
  EXPECT_THROW(parse_word("s", 3), DomainError);
}

TEST(Word, FreeReduction) {
  EXPECT_TRUE(free_reduce(parse_word("s1 S1", 2)).empty());
  EXPECT_EQ(to_string(free_reduce(parse_word("z1 z1 z1", 2))), "z1");
  EXPECT_TRUE(free_reduce(parse_word("s1 z2 z2 S1", 3)).empty());
  EXPECT_EQ(to_string(free_reduce(parse_word("s1 s1", 2))), "s1 s1");
}

TEST(Word, InverseAndConcat) {
  auto w = parse_word("s1 z2 S2", 3);
  EXPECT_TRUE(free_reduce(concat(w, inverse(w))).empty());
  EXPECT_EQ(to_string(inverse(w)), "s2 z2 S1");
}

TEST(Forgetful, Images) {
  EXPECT_TRUE(forgetful(parse_word("s1 s1", 2)).is_identity());
  EXPECT_TRUE(forgetful(parse_word("", 4)).is_identity());
  // The rightmost letter moves strands first.
  EXPECT_EQ(forgetful(parse_word("z1 s2", 3)).images(), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(forgetful(parse_word("z1 s2", 3)), transposition(3, 1) * transposition(3, 2));
}

TEST(Forgetful, AgreesWithStrandTracing) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    auto w = oracle::random_positive_word(rng, 4, 9);
    EXPECT_EQ(forgetful(w).images(), oracle::trace(w).forgetful) << to_string(w);
  }
}

TEST(Permutation, GroupLaws) {
  Permutation p({2, 3, 1});
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.inversions(), 2u);
  EXPECT_EQ(forgetful(zeta_word(p)), p);
}

TEST(Garside, TwistOnTwoStrands) {
  EXPECT_EQ(to_string(free_reduce(garside_twist(parse_word("s1", 2)))), "z1 s1 z1");
  EXPECT_EQ(forgetful(garside_twist(parse_word("z1", 2))), transposition(2, 1));
}

TEST(Garside, TwistIsInvolutiveUpToZetaRuns) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : enumerate_words(n, 3, false)) {
      auto twice = garside_twist(garside_twist(w));
      EXPECT_EQ(normalize_zeta_runs(free_reduce(twice)), normalize_zeta_runs(free_reduce(w))) << to_string(w);
    }
  }
}

TEST(Garside, WordRepresentsLongestElement) {
  for (int n = 2; n <= 5; ++n) {
    auto p = forgetful(garside_word(n));
    for (int i = 1; i <= n; ++i) EXPECT_EQ(p(i), n + 1 - i);
    EXPECT_EQ(garside_word(n).length(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(ShortestForm, Examples) {
  auto f = vb2_shortest_form(parse_word("z1 z1 s1", 2));
  EXPECT_EQ(f.sigmas, 1);
  EXPECT_EQ(f.eps, (std::vector<int>{0, 0}));
  f = vb2_shortest_form(parse_word("z1 s1 z1 s1", 2));
  EXPECT_EQ(f.sigmas, 2);
  EXPECT_EQ(f.eps, (std::vector<int>{0, 1, 1}));
  f = vb2_shortest_form(parse_word("s1 s1", 2));
  EXPECT_EQ(f.eps, (std::vector<int>{0, 0, 0}));
}

TEST(ShortestForm, RoundTripsAndSeparatesPositiveWords) {
  std::map<std::string, std::string> seen;
  for (const auto& w : enumerate_words(2, 6, true)) {
    auto f = vb2_shortest_form(w);
    EXPECT_EQ(vb2_shortest_form(from_shortest_form(f)), f);
    // Words with equal shortest forms are equal modulo zeta cancellation.
    auto key = to_string(f);
    auto reduced = to_string(free_reduce(w));
    auto [it, fresh] = seen.emplace(key, reduced);
    if (!fresh) EXPECT_EQ(it->second, reduced);
  }
}

TEST(Enumerate, CountsAndOrder) {
  // Alphabet sizes: positive 2(n-1), full 3(n-1).
  EXPECT_EQ(enumerate_words(2, 2, true).size(), 1u + 2 + 4);
  EXPECT_EQ(enumerate_words(3, 2, false).size(), 1u + 6 + 36);
  auto words = enumerate_words(3, 2, true);
  EXPECT_TRUE(words.front().empty());
  for (std::size_t i = 1; i < words.size(); ++i) EXPECT_LE(words[i - 1].length(), words[i].length());
}

TEST(Relations, CountAndShape) {
  for (int n = 2; n <= 5; ++n) {
    for (bool positive : {true, false}) {
      for (const auto& r : defining_relations(n, positive)) {
        EXPECT_EQ(r.lhs.strands(), n);
        EXPECT_EQ(forgetful(r.lhs), forgetful(r.rhs)) << r.name;
        if (positive) EXPECT_TRUE(is_positive(r.lhs) && is_positive(r.rhs));
      }
    }
  }
  EXPECT_TRUE(defining_relations(1, false).empty());
}
