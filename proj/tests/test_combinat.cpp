#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ncmac/combinat.hpp"

using namespace ncmac;

TEST(Combinat, MinDestd) {
  EXPECT_EQ(min_destd(parse_perm("12453")), parse_seq("11221"));
  EXPECT_EQ(min_destd(identity_perm(5)), Word(5, 1));
  EXPECT_EQ(min_destd(parse_perm("321")), parse_seq("321"));
}

TEST(Combinat, Standardize) {
  EXPECT_EQ(standardize(parse_seq("11221")), parse_perm("12453"));
  EXPECT_EQ(standardize(parse_seq("111")), parse_perm("123"));
  EXPECT_EQ(standardize(parse_seq("21")), parse_perm("21"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : all_perms(n)) EXPECT_EQ(standardize(min_destd(s)), s);
}

TEST(Combinat, MinDestdBelowIdentityInRefinement) {
  for (const auto& u : packed_words(4)) EXPECT_TRUE(refines(min_destd(standardize(u)), u) || min_destd(standardize(u)) == u);
}

TEST(Combinat, RefinementBelow) {
  std::vector<Word> want = {parse_seq("1111"), parse_seq("1121"), parse_seq("2122"), parse_seq("2132")};
  EXPECT_EQ(refinement_below(parse_seq("2132")), want);
  EXPECT_EQ(refinement_below(parse_seq("11")), std::vector<Word>{parse_seq("11")});
  EXPECT_EQ(refinement_below(parse_seq("12")), (std::vector<Word>{parse_seq("11"), parse_seq("12")}));
}

TEST(Combinat, Lehmer) {
  EXPECT_EQ(lehmer_code(parse_perm("3241")), parse_seq("2110"));
  EXPECT_EQ(lehmer_code(identity_perm(4)), std::vector<int>(4, 0));
  EXPECT_EQ(lehmer_code(parse_perm("23541")), parse_seq("11210"));
  for (const auto& w : all_perms(5)) EXPECT_EQ(code_to_perm(lehmer_code(w)), w);
  EXPECT_THROW(code_to_perm({3, 0, 0}), CodeOutOfRange);
}

TEST(Combinat, Avoids) {
  EXPECT_TRUE(avoids(parse_perm("3241"), parse_perm("312")));
  EXPECT_FALSE(avoids(parse_perm("312"), parse_perm("312")));
  EXPECT_TRUE(avoids(identity_perm(6), parse_perm("21")));
  int c = 0;
  for (const auto& w : all_perms(6)) c += avoids(w, parse_perm("312"));
  EXPECT_EQ(c, 132);
}

TEST(Combinat, ReducedWord) {
  auto w = reduced_word(parse_perm("3241"));
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(perm_of_word(4, w), parse_perm("3241"));
  EXPECT_EQ(perm_of_word(4, {2, 1, 2, 3}), parse_perm("3241"));
  EXPECT_TRUE(reduced_word(identity_perm(3)).empty());
  EXPECT_EQ(reduced_word(parse_perm("21")), std::vector<int>{1});
}

TEST(Combinat, BruhatInterval3241) {
  auto iv = bruhat_interval(parse_perm("3241"));
  EXPECT_EQ(iv.size(), 12u);
  // The listed reduced-word classes: e;1,2,3;21,12,23;13;213,123;212;2123.
  std::set<Perm> want;
  for (std::vector<int> w : std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {2, 1}, {1, 2}, {2, 3}, {1, 3}, {2, 1, 3}, {1, 2, 3}, {2, 1, 2}, {2, 1, 2, 3}})
    want.insert(perm_of_word(4, w));
  EXPECT_EQ(std::set<Perm>(iv.begin(), iv.end()), want);
  EXPECT_EQ(bruhat_interval(identity_perm(3)).size(), 1u);
  EXPECT_EQ(bruhat_interval(parse_perm("21")).size(), 2u);
}

TEST(Combinat, BruhatCriterionMatchesSubwords) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_perms(n)) {
      auto a = bruhat_interval(w);
      EXPECT_EQ(std::set<Perm>(a.begin(), a.end()), bruhat_interval_subwords(w));
    }
}

TEST(Combinat, Kostka) {
  EXPECT_EQ(kostka({3, 2, 1}, {3, 2, 1}), 1);
  EXPECT_EQ(kostka({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(kostka({1, 1}, {2}), 0);
  // sum_lambda K_{lambda,1^n} f^lambda = n!
  for (int n = 1; n <= 7; ++n) {
    long long s = 0;
    for (const auto& l : partitions(n)) s += kostka(l, Composition(n, 1)) * count_syt(l);
    EXPECT_EQ(s, factorial(n));
  }
  // sum_lambda K_{lambda,mu} f^lambda = n!/prod mu_i!
  for (const auto& mu : partitions(6)) {
    long long s = 0, want = factorial(6);
    for (int x : mu) want /= factorial(x);
    for (const auto& l : partitions(6)) s += kostka(l, mu) * count_syt(l);
    EXPECT_EQ(s, want);
  }
}

TEST(Combinat, DTwoAboveOne) {
  EXPECT_EQ(d_two_above_one({3, 2, 1}), 8);
  EXPECT_EQ(d_two_above_one({4, 1, 1}), 4);
  EXPECT_EQ(d_two_above_one({5}), 0);
}

TEST(Combinat, PackedWordsFubini) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(static_cast<long long>(packed_words(n).size()), fubini(n));
  auto w = packed_words(3);
  EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
}

TEST(Combinat, PartitionsOrder) {
  std::vector<Partition> want = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(partitions(4), want);
  EXPECT_EQ(partitions(8).size(), 22u);
}
