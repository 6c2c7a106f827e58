#include "netocc/verifier.hpp"

#include <cstdlib>

#include <gtest/gtest.h>

#include "netocc/serialize.hpp"

namespace netocc {
namespace {

TEST(VerifyFibonacciTest, SmallSweepPasses) {
  const auto report = verify_fibonacci(12);
  EXPECT_EQ(report.family, Family::kFibonacci);
  ASSERT_EQ(report.orders.size(), 6u);
  for (std::size_t k = 0; k < report.orders.size(); ++k) {
    EXPECT_EQ(report.orders[k].order, 7 + static_cast<int>(k));
    for (const auto& [name, claim] : report.orders[k].claims.claims()) {
      EXPECT_TRUE(claim.pass) << report.orders[k].order << ": " << name;
    }
  }
  EXPECT_TRUE(report.passed());
  const auto& net = report.orders[0].claims.at("net occurrences: oracle equals prediction");
  EXPECT_EQ((*net.witness)["count"], 3);
}

TEST(VerifyFibonacciTest, DomainIsGuarded) {
  EXPECT_THROW(verify_fibonacci(6), DomainError);
  EXPECT_THROW(verify_fibonacci(41), DomainError);
}

TEST(VerifyThueMorseTest, SmallSweepPasses) {
  const auto report = verify_thue_morse(9);
  ASSERT_EQ(report.orders.size(), 5u);
  for (const auto& o : report.orders) {
    for (const auto& [name, claim] : o.claims.claims()) EXPECT_TRUE(claim.pass) << o.order << ": " << name;
    EXPECT_TRUE(o.claims.contains("ab: last_level_letter_scan"));
    EXPECT_EQ((*o.claims.at("net occurrences: oracle equals prediction").witness)["count"], 9);
  }
  // The count recurrence overshoots at the letter level: a_4 = 11 vs 8 letters 'a' in T_5.
  const auto& scan = *report.orders[0].claims.at("ab: last_level_letter_scan").witness;
  EXPECT_EQ(scan["oracle_count"], 8);
  EXPECT_EQ(scan["recurrence_count"], 11);
  EXPECT_EQ(scan["agree"], false);
}

TEST(VerifyThueMorseTest, DomainIsGuarded) {
  EXPECT_THROW(verify_thue_morse(4), DomainError);
}

TEST(VerifyReportTest, IndependentOfWorkerCount) {
  setenv("NETOCC_THREADS", "1", 1);
  const auto serial = to_json(verify_thue_morse(8));
  setenv("NETOCC_THREADS", "3", 1);
  const auto parallel = to_json(verify_thue_morse(8));
  unsetenv("NETOCC_THREADS");
  auto strip = [](nlohmann::json j) {
    j.erase("wall_time_seconds");
    return j;
  };
  EXPECT_EQ(strip(serial), strip(parallel));
}

TEST(WorkerCountTest, HonoursCap) {
  setenv("NETOCC_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  setenv("NETOCC_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  unsetenv("NETOCC_THREADS");
}

TEST(OnocPropertyTest, RandomSweepIsDeterministic) {
  const auto a = verify_onoc_lemma_random(42, 300, 24);
  const auto b = verify_onoc_lemma_random(42, 300, 24);
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(a.samples, 300u);
  EXPECT_EQ(a.tested + a.skipped, a.samples);
  EXPECT_TRUE(a.violations.empty());
  EXPECT_GT(a.tested, 0u);
  EXPECT_NE(to_json(verify_onoc_lemma_random(43, 300, 24)), to_json(a));
}

TEST(OnocPropertyTest, TinyTexts) {
  const auto r = verify_onoc_lemma_random(7, 200, 8);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.max_len, 8u);
}

TEST(OnocPropertyTest, ExhaustiveSweep) {
  const auto r = verify_onoc_lemma_exhaustive(10);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.samples, (1u << 11) - 2);
  EXPECT_EQ(r.tested + r.skipped, r.samples);
  EXPECT_TRUE(r.violations.empty());
}

TEST(OnocPropertyTest, ArgumentChecks) {
  EXPECT_THROW(verify_onoc_lemma_random(1, 0, 10), DomainError);
  EXPECT_THROW(verify_onoc_lemma_random(1, 10, 33), DomainError);
  EXPECT_THROW(verify_onoc_lemma_exhaustive(0), DomainError);
  EXPECT_THROW(verify_onoc_lemma_exhaustive(21), DomainError);
}

}  // namespace
}  // namespace netocc
