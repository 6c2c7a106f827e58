#include "netocc/occurrence.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace netocc {
namespace {

TEST(PositionSetTest, Construction) {
  EXPECT_THROW(PositionSet(std::vector<Position>{3, 1}), DomainError);
  EXPECT_THROW(PositionSet(std::vector<Position>{1, 1}), DomainError);
  EXPECT_EQ(PositionSet::from_unsorted({5, 1, 5, 3}), (PositionSet{1, 3, 5}));
  EXPECT_THROW(PositionSet{}.max(), DomainError);
  EXPECT_EQ((PositionSet{2, 9}).max(), 9u);
}

TEST(PositionSetTest, Algebra) {
  const PositionSet a{1, 4, 7};
  const PositionSet b{4, 5};
  EXPECT_EQ(a.shifted(3), (PositionSet{4, 7, 10}));
  EXPECT_EQ(a.united(b), (PositionSet{1, 4, 5, 7}));
  EXPECT_EQ(a.intersected(b), (PositionSet{4}));
  EXPECT_EQ(a.minus(b), (PositionSet{1, 7}));
  EXPECT_FALSE(a.disjoint_with(b));
  EXPECT_TRUE(a.disjoint_with(PositionSet{2, 3}));
  EXPECT_TRUE(a.contains(7));
  EXPECT_FALSE(a.contains(8));
}

TEST(FindOccurrencesTest, Examples) {
  EXPECT_EQ(find_occurrences(Word("abaab"), fib_word(7)), (PositionSet{1, 6, 9}));
  EXPECT_EQ(find_occurrences(Word("abba"), tm_word(5)), (PositionSet{1, 7, 13}));
  EXPECT_TRUE(find_occurrences(Word("bb"), fib_word(7)).empty());
  EXPECT_EQ(find_occurrences(Word("aa"), Word("aaaa")), (PositionSet{1, 2, 3}));
  EXPECT_THROW(find_occurrences(Word(""), fib_word(7)), DomainError);
}

TEST(FindOccurrencesTest, AgreesWithStdFind) {
  const std::string text = oracle::fib(12) + oracle::tm(7);
  for (std::size_t len = 1; len <= 6; ++len) {
    for (unsigned long long bits = 0; bits < (1ull << len); ++bits) {
      const std::string p = oracle::binary_text(len, bits);
      const auto expected = oracle::find_all(p, text);
      EXPECT_EQ(find_occurrences(Word(p), Word(text)).values(), expected) << p;
      EXPECT_EQ(count_occurrences(p, text), expected.size());
    }
  }
}

TEST(ExtensionTest, ReadsNeighbours) {
  const Word f7 = fib_word(7);
  auto ext = extension_characters(f7, {1, 6});
  EXPECT_FALSE(ext.left.has_value());
  EXPECT_EQ(ext.right, Letter::kB);
  ext = extension_characters(f7, {9, 13});
  EXPECT_EQ(ext.left, Letter::kA);
  EXPECT_FALSE(ext.right.has_value());
  ext = extension_characters(tm_word(5), {7, 10});
  EXPECT_EQ(ext.left, Letter::kA);
  EXPECT_EQ(ext.right, Letter::kA);
  EXPECT_THROW(extension_characters(f7, {0, 2}), DomainError);
  EXPECT_THROW(extension_characters(f7, {5, 14}), DomainError);
  EXPECT_THROW(extension_characters(f7, {5, 4}), DomainError);
}

TEST(RelationTest, IntervalFlags) {
  auto r = occurrence_relation({4, 6}, {1, 6});
  EXPECT_TRUE(r.sub);
  EXPECT_TRUE(r.proper_sub);
  EXPECT_TRUE(r.overlap);
  EXPECT_FALSE(r.super);

  r = occurrence_relation({1, 6}, {4, 9});
  EXPECT_TRUE(r.overlap);
  EXPECT_FALSE(r.sub);
  EXPECT_FALSE(r.super);

  r = occurrence_relation({1, 3}, {5, 8});
  EXPECT_TRUE(r.disjoint);
  EXPECT_FALSE(r.overlap);

  r = occurrence_relation({2, 5}, {2, 5});
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.sub);
  EXPECT_TRUE(r.super);
  EXPECT_FALSE(r.proper_sub);
  EXPECT_FALSE(r.proper_super);

  r = occurrence_relation({1, 9}, {3, 4});
  EXPECT_TRUE(r.proper_super);
}

TEST(IsNetOccurrenceTest, Examples) {
  const Word f7 = fib_word(7);
  EXPECT_TRUE(is_net_occurrence(f7, {1, 6}));
  EXPECT_FALSE(is_net_occurrence(f7, {1, 5}));
  EXPECT_TRUE(is_net_occurrence(f7, {9, 13}));
  EXPECT_FALSE(is_net_occurrence(f7, {1, 13}));  // unique
}

TEST(IsNetOccurrenceTest, AgreesWithOracleOnAllShortTexts) {
  for (std::size_t len = 1; len <= 9; ++len) {
    for (unsigned long long bits = 0; bits < (1ull << len); ++bits) {
      const std::string t = oracle::binary_text(len, bits);
      const Word w(t);
      for (std::size_t s = 1; s <= len; ++s) {
        for (std::size_t e = s; e <= len; ++e) {
          ASSERT_EQ(is_net_occurrence(w, {s, e}), oracle::is_net(t, s, e)) << t << " " << s << "," << e;
        }
      }
    }
  }
}

}  // namespace
}  // namespace netocc
