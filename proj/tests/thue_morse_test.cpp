#include "netocc/thue_morse.hpp"

#include <gtest/gtest.h>

#include "netocc/net_frequency.hpp"
#include "netocc/onoc.hpp"
#include "oracle.hpp"

namespace netocc {
namespace {

std::vector<Occurrence> occs(std::initializer_list<std::pair<Position, Position>> list) {
  std::vector<Occurrence> out;
  for (auto [s, e] : list) out.push_back({s, e});
  return out;
}

// The fewest-factor factorization holding every occurrence of `target` as a
// factor: the occurrences themselves plus one factor per nonempty gap.
std::vector<std::string> reference_factorization(const std::string& text, const std::string& target) {
  std::vector<std::string> out;
  std::size_t pos = 1;
  for (std::size_t p : oracle::find_all(target, text)) {
    if (p > pos) out.push_back(oracle::sub(text, pos, p - 1));
    out.push_back(target);
    pos = p + target.size();
  }
  if (pos <= text.size()) out.push_back(oracle::sub(text, pos, text.size()));
  return out;
}

std::vector<std::string> resolved(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& x : f.factors) out.push_back(x.resolve().str());
  return out;
}

TEST(AbSetsTest, Examples) {
  const auto s52 = ab_sets(5, 2);
  EXPECT_EQ(s52.a_set, (PositionSet{1, 7, 13}));
  EXPECT_EQ(s52.b_set, (PositionSet{5, 9}));
  EXPECT_EQ(ab_sets(5, 3).a_set, (PositionSet{1, 4, 7, 11, 13}));
  const auto s125 = ab_sets(12, 5);
  EXPECT_EQ(s125.a_set.values(), oracle::find_all(oracle::tm(7), oracle::tm(12)));
  EXPECT_EQ(s125.b_set.values(), oracle::find_all(oracle::flip(oracle::tm(7)), oracle::tm(12)));
}

TEST(AbSetsTest, BaseCases) {
  EXPECT_EQ(ab_sets(6, 0).a_set, (PositionSet{1}));
  EXPECT_TRUE(ab_sets(6, 0).b_set.empty());
  EXPECT_EQ(ab_sets(6, 1).a_set, (PositionSet{1}));
  EXPECT_EQ(ab_sets(6, 1).b_set, (PositionSet{17}));
}

TEST(AbSetsTest, LastLevelIsOutsideTheRecurrence) {
  EXPECT_THROW(ab_sets(4, 3), DomainError);
  EXPECT_THROW(ab_sets(1, 0), DomainError);
  EXPECT_THROW(ab_sets(6, -1), DomainError);
  // The count recurrence would predict a_3 = 5 letters 'a' in T_4; there are 4.
  EXPECT_EQ(ab_counts(3).a[3], 5u);
  EXPECT_EQ(oracle::count("a", oracle::tm(4)), 4u);
}

TEST(AbSetsTest, MatchesOracleWithIdentities) {
  for (int i = 2; i <= 13; ++i) {
    const std::string text = oracle::tm(i);
    for (const auto& step : ab_trace(i, i - 2)) {
      const std::string target = oracle::tm(i - step.j);
      EXPECT_EQ(step.sets.a_set.values(), oracle::find_all(target, text)) << i << "," << step.j;
      EXPECT_EQ(step.sets.b_set.values(), oracle::find_all(oracle::flip(target), text)) << i << "," << step.j;
      EXPECT_TRUE(step.a_identities) << i << "," << step.j;
      EXPECT_TRUE(step.b_identities) << i << "," << step.j;
      if (step.j >= 1 && !step.sets.a_set.empty()) {
        EXPECT_LE(step.sets.a_set.max(), tm_length(i) - tm_length(i - step.j) + 1);
      }
    }
  }
}

TEST(AbCountsTest, Sequences) {
  const AbCounts c = ab_counts(4);
  EXPECT_EQ(c.a, (std::vector<std::uint64_t>{1, 1, 3, 5, 11}));
  EXPECT_EQ(c.b, (std::vector<std::uint64_t>{0, 1, 2, 5, 10}));
  EXPECT_EQ(ab_counts(0).a, std::vector<std::uint64_t>{1});
  EXPECT_THROW(ab_counts(-1), DomainError);

  // a_j is the Jacobsthal number J_{j+1} = (2^{j+1} - (-1)^{j+1}) / 3, one
  // index above J_j = (2^j - (-1)^j) / 3.
  auto jacobsthal = [](int k) { return ((std::int64_t{1} << k) - (k % 2 ? -1 : 1)) / 3; };
  const AbCounts big = ab_counts(20);
  for (int j = 0; j <= 20; ++j) EXPECT_EQ(static_cast<std::int64_t>(big.a[j]), jacobsthal(j + 1)) << j;
  EXPECT_NE(static_cast<std::int64_t>(big.a[2]), jacobsthal(2));
}

TEST(AbCountsTest, MatchOracleOnOrderTwelve) {
  const std::string text = oracle::tm(12);
  const AbCounts c = ab_counts(10);
  for (int j = 0; j <= 10; ++j) {
    EXPECT_EQ(c.a[j], oracle::count(oracle::tm(12 - j), text)) << j;
    EXPECT_EQ(c.b[j], oracle::count(oracle::flip(oracle::tm(12 - j)), text)) << j;
  }
}

TEST(PredictedNetOccurrencesTest, OrderFive) {
  const auto p = predicted_tm_net_occurrences(5);
  EXPECT_EQ(p, occs({{1, 4}, {3, 5}, {4, 6}, {5, 8}, {7, 10}, {9, 12}, {11, 13}, {12, 14}, {13, 16}}));
  EXPECT_TRUE(is_onoc(tm_word(5), p));
  EXPECT_THROW(predicted_tm_net_occurrences(4), DomainError);
}

TEST(PredictedNetOccurrencesTest, MatchesOracle) {
  for (int i = 5; i <= 11; ++i) {
    EXPECT_EQ(predicted_tm_net_occurrences(i), occurrences_of(net_occurrences_bruteforce(tm_word(i)))) << i;
  }
}

TEST(NetStringsTest, OrderFive) {
  const auto s = tm_net_strings(5);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].str(), "abba");
  EXPECT_EQ(s[1].str(), "baab");
  EXPECT_EQ(s[2].str(), "aba");
  EXPECT_EQ(s[3].str(), "bab");
}

TEST(RepetitionScanTest, FindsOverlapsAndCubes) {
  EXPECT_FALSE(scan_repetitions(Word("abba")).overlap.has_value());
  const auto aaa = scan_repetitions(Word("baaab"));
  EXPECT_EQ(aaa.overlap, (Occurrence{2, 4}));
  EXPECT_EQ(aaa.cube, (Occurrence{2, 4}));
  const auto ababa = scan_repetitions(Word("ababa"));
  EXPECT_EQ(ababa.overlap, (Occurrence{1, 5}));
  EXPECT_FALSE(ababa.cube.has_value());
  EXPECT_FALSE(scan_repetitions(Word("")).overlap.has_value());
}

TEST(RepetitionScanTest, AgreesWithNaiveCheck) {
  // axaxa with |ax| = d, or xxx with |x| = d, checked by direct substring comparison.
  auto naive = [](const std::string& t, bool cube) {
    for (std::size_t p = 0; p < t.size(); ++p) {
      for (std::size_t d = 1; p + (cube ? 3 * d : 2 * d + 1) <= t.size(); ++d) {
        const std::size_t len = cube ? 3 * d : 2 * d + 1;
        bool periodic = true;
        for (std::size_t k = p + d; k < p + len && periodic; ++k) periodic = t[k] == t[k - d];
        if (periodic) return true;
      }
    }
    return false;
  };
  for (std::size_t len = 1; len <= 12; ++len) {
    for (unsigned long long bits = 0; bits < (1ull << len); ++bits) {
      const std::string t = oracle::binary_text(len, bits);
      const auto scan = scan_repetitions(Word(t));
      ASSERT_EQ(scan.overlap.has_value(), naive(t, false)) << t;
      ASSERT_EQ(scan.cube.has_value(), naive(t, true)) << t;
    }
  }
}

TEST(IdentitiesTest, AllHold) {
  for (int i = 5; i <= 12; ++i) {
    const ClaimMap claims = check_tm_identities(i);
    EXPECT_EQ(claims.size(), 6u);
    EXPECT_TRUE(claims.all_pass()) << i;
  }
  EXPECT_EQ(check_tm_identities(13).size(), 4u);
  EXPECT_THROW(check_tm_identities(4), DomainError);
}

TEST(LemmasTest, AllHold) {
  for (int i = 5; i <= 11; ++i) {
    const ClaimMap claims = check_tm_lemmas(i);
    for (const auto& [name, claim] : claims.claims()) {
      EXPECT_TRUE(claim.pass) << i << ": " << name << " " << (claim.witness ? claim.witness->dump() : "");
    }
  }
}

TEST(SmallestFactorizationTest, LevelTwo) {
  for (int i = 4; i <= 9; ++i) {
    EXPECT_EQ(smallest_factorization(i, 2, TargetKind::kA).factorization.factors,
              (std::vector<FactorRef>{FactorRef::tm(i - 2), FactorRef::tm_flip(i - 3), FactorRef::tm(i - 2),
                                      FactorRef::tm(i - 3), FactorRef::tm(i - 2)}));
    EXPECT_EQ(smallest_factorization(i, 2, TargetKind::kB).factorization.factors,
              (std::vector<FactorRef>{FactorRef::tm(i - 2), FactorRef::tm_flip(i - 2), FactorRef::tm_flip(i - 2),
                                      FactorRef::tm(i - 2)}));
  }
}

TEST(SmallestFactorizationTest, BaseCases) {
  EXPECT_EQ(smallest_factorization(6, 0, TargetKind::kA).factorization.factors,
            std::vector<FactorRef>{FactorRef::tm(6)});
  EXPECT_TRUE(smallest_factorization(6, 0, TargetKind::kB).factorization.factors.empty());
  EXPECT_EQ(smallest_factorization(6, 1, TargetKind::kB).factorization.factors,
            (std::vector<FactorRef>{FactorRef::tm(5), FactorRef::tm_flip(5)}));
  EXPECT_THROW(smallest_factorization(6, 6, TargetKind::kA), DomainError);
  EXPECT_THROW(smallest_factorization(1, 0, TargetKind::kA), DomainError);
}

TEST(SmallestFactorizationTest, OrderEightLevelFive) {
  const auto sf = smallest_factorization(8, 5, TargetKind::kA);
  EXPECT_EQ(sf.factorization.flatten(), tm_word(8));
  std::vector<Position> held;
  Position pos = 1;
  for (const auto& f : sf.factorization.factors) {
    if (f == FactorRef::tm(3)) held.push_back(pos);
    pos += f.length();
  }
  EXPECT_EQ(held, oracle::find_all(oracle::tm(3), oracle::tm(8)));
}

TEST(SmallestFactorizationTest, MatchesReferenceBelowLetterLevel) {
  for (int i = 2; i <= 12; ++i) {
    for (int j = 0; j <= i - 2; ++j) {
      for (TargetKind kind : {TargetKind::kA, TargetKind::kB}) {
        if (kind == TargetKind::kB && j == 0) continue;
        const auto sf = smallest_factorization(i, j, kind);
        const std::string target = kind == TargetKind::kA ? oracle::tm(i - j) : oracle::flip(oracle::tm(i - j));
        EXPECT_EQ(resolved(sf.factorization), reference_factorization(oracle::tm(i), target))
            << i << "," << j << "," << (kind == TargetKind::kA ? "A" : "B");
        EXPECT_TRUE(check_basis(sf).all()) << i << "," << j;
        EXPECT_TRUE(validate_smallest_factorization(i, j, kind, sf.factorization));
      }
    }
  }
}

TEST(SmallestFactorizationTest, LetterLevelIsSmallestButLeavesTheBasis) {
  for (int i = 2; i <= 12; ++i) {
    for (TargetKind kind : {TargetKind::kA, TargetKind::kB}) {
      const auto sf = smallest_factorization(i, i - 1, kind);
      const std::string target = kind == TargetKind::kA ? "a" : "b";
      EXPECT_EQ(resolved(sf.factorization), reference_factorization(oracle::tm(i), target)) << i;
      EXPECT_TRUE(validate_smallest_factorization(i, i - 1, kind, sf.factorization));
      const BasisCheck basis = check_basis(sf);
      EXPECT_TRUE(basis.first_is_target || kind == TargetKind::kB) << i;
    }
  }
  // T_4 = abbabaab: the run "bb" must be a single factor.
  EXPECT_FALSE(check_basis(smallest_factorization(4, 3, TargetKind::kA)).in_basis);
  EXPECT_TRUE(check_basis(smallest_factorization(2, 1, TargetKind::kA)).all());
}

TEST(ValidateTest, RejectsSplitGapsAndMissingTargets) {
  Factorization split;
  split.target = tm_word(5);
  // T_5 = T_3 ~T_3 ~T_3 T_3 holds T_3 at 1 and 13 but misses 7.
  split.factors = {FactorRef::tm(3), FactorRef::tm_flip(3), FactorRef::tm_flip(3), FactorRef::tm(3)};
  EXPECT_FALSE(validate_smallest_factorization(5, 2, TargetKind::kA, split));
  // Correct B factorization, then two adjacent non-target factors.
  EXPECT_TRUE(validate_smallest_factorization(5, 2, TargetKind::kB, split));
  split.factors = {FactorRef::tm(2), FactorRef::tm_flip(2), FactorRef::tm_flip(3), FactorRef::tm_flip(3),
                   FactorRef::tm(3)};
  EXPECT_FALSE(validate_smallest_factorization(5, 2, TargetKind::kB, split));
  split.factors = {FactorRef::tm(3)};
  EXPECT_THROW(validate_smallest_factorization(5, 2, TargetKind::kA, split), DomainError);
}

TEST(ValidateTest, ExamplesFromConstruction) {
  EXPECT_TRUE(validate_smallest_factorization(8, 3, TargetKind::kA,
                                              smallest_factorization(8, 3, TargetKind::kA).factorization));
  EXPECT_TRUE(validate_smallest_factorization(10, 4, TargetKind::kB,
                                              smallest_factorization(10, 4, TargetKind::kB).factorization));
}

}  // namespace
}  // namespace netocc
