#include "netocc/netocc.h"

#include <cstring>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

using nlohmann::json;

TEST(CApiTest, Words) {
  netocc_word* w = nullptr;
  ASSERT_EQ(netocc_word_fib(7, &w), NETOCC_OK);
  EXPECT_STREQ(netocc_word_data(w), "abaababaabaab");
  EXPECT_EQ(netocc_word_length(w), 13u);
  netocc_word_free(w);

  ASSERT_EQ(netocc_word_tm(3, 1, &w), NETOCC_OK);
  EXPECT_STREQ(netocc_word_data(w), "baab");
  netocc_word_free(w);

  EXPECT_EQ(netocc_word_fib(0, &w), NETOCC_ERR_DOMAIN);
  EXPECT_NE(std::strlen(netocc_last_error()), 0u);
  EXPECT_EQ(netocc_word_from_string("abc", 3, &w), NETOCC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(netocc_word_fib(7, nullptr), NETOCC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(netocc_word_read_file("/nonexistent/word.txt", &w), NETOCC_ERR_IO);
  netocc_word_free(nullptr);
  netocc_result_free(nullptr);
}

TEST(CApiTest, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "netocc_capi_test.txt").string();
  netocc_word* w = nullptr;
  ASSERT_EQ(netocc_word_from_string("abba", 4, &w), NETOCC_OK);
  ASSERT_EQ(netocc_word_write_file(w, path.c_str()), NETOCC_OK);
  netocc_word* back = nullptr;
  ASSERT_EQ(netocc_word_read_file(path.c_str(), &back), NETOCC_OK);
  EXPECT_STREQ(netocc_word_data(back), "abba");
  netocc_word_free(w);
  netocc_word_free(back);
  std::filesystem::remove(path);
}

TEST(CApiTest, NetOccurrences) {
  netocc_word* w = nullptr;
  ASSERT_EQ(netocc_word_fib(7, &w), NETOCC_OK);
  for (netocc_engine engine : {NETOCC_ENGINE_ORACLE, NETOCC_ENGINE_INDEXED}) {
    netocc_result* r = nullptr;
    ASSERT_EQ(netocc_net_occurrences(w, engine, &r), NETOCC_OK);
    ASSERT_EQ(netocc_result_span_count(r), 3u);
    netocc_span span{};
    ASSERT_EQ(netocc_result_span(r, 1, &span), NETOCC_OK);
    EXPECT_EQ(span.start, 6u);
    EXPECT_EQ(span.end, 11u);
    EXPECT_EQ(netocc_result_span(r, 3, &span), NETOCC_ERR_INVALID_ARGUMENT);
    const json j = json::parse(netocc_result_json(r));
    EXPECT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["string"], "abaaba");
    EXPECT_TRUE(j[0]["left"].is_null());
    EXPECT_EQ(netocc_result_passed(r), 1);
    netocc_result_free(r);
  }
  netocc_result* r = nullptr;
  EXPECT_EQ(netocc_net_occurrences(w, static_cast<netocc_engine>(9), &r), NETOCC_ERR_INVALID_ARGUMENT);

  netocc_word* p = nullptr;
  ASSERT_EQ(netocc_word_from_string("abaaba", 6, &p), NETOCC_OK);
  std::size_t nf = 0;
  ASSERT_EQ(netocc_net_frequency(w, p, &nf), NETOCC_OK);
  EXPECT_EQ(nf, 2u);
  netocc_word_free(p);
  netocc_word_free(w);
}

TEST(CApiTest, OccurrenceSetsAndFactorizations) {
  netocc_result* r = nullptr;
  ASSERT_EQ(netocc_occurrence_sets(NETOCC_FAMILY_FIBONACCI, 7, 2, &r), NETOCC_OK);
  json j = json::parse(netocc_result_json(r));
  EXPECT_EQ(j["recurrence"], json::array({1, 6, 9}));
  EXPECT_EQ(j["equal"], true);
  netocc_result_free(r);

  EXPECT_EQ(netocc_occurrence_sets(NETOCC_FAMILY_THUE_MORSE, 4, 3, &r), NETOCC_ERR_DOMAIN);

  ASSERT_EQ(netocc_smallest_factorization(6, 2, 'B', &r), NETOCC_OK);
  j = json::parse(netocc_result_json(r));
  ASSERT_EQ(j["factors"].size(), 4u);
  EXPECT_EQ(j["factors"][1], (json{{"kind", "TMflip"}, {"order", 4}, {"text", nullptr}}));
  netocc_result_free(r);

  ASSERT_EQ(netocc_smallest_factorization(4, 3, 'A', &r), NETOCC_OK);
  j = json::parse(netocc_result_json(r));
  EXPECT_EQ(j["factors"][1], (json{{"kind", "lit"}, {"order", nullptr}, {"text", "bb"}}));
  netocc_result_free(r);

  EXPECT_EQ(netocc_smallest_factorization(6, 2, 'C', &r), NETOCC_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, OnocCheck) {
  netocc_word* w = nullptr;
  ASSERT_EQ(netocc_word_from_string("aaaaaaabaaaaba", 14, &w), NETOCC_OK);
  const netocc_span cover[] = {{1, 6}, {4, 9}, {9, 14}};
  netocc_result* r = nullptr;
  ASSERT_EQ(netocc_onoc_check(w, cover, 3, &r), NETOCC_OK);
  const json j = json::parse(netocc_result_json(r));
  EXPECT_EQ(j["offending_supers"], json::array({json{{"start", 2}, {"end", 7}}}));
  EXPECT_EQ(netocc_result_passed(r), 1);
  netocc_result_free(r);

  const netocc_span broken[] = {{1, 6}, {9, 14}};
  ASSERT_EQ(netocc_onoc_check(w, broken, 2, &r), NETOCC_OK);
  EXPECT_EQ(netocc_result_passed(r), 0);
  netocc_result_free(r);
  EXPECT_EQ(netocc_onoc_check(w, cover, 0, &r), NETOCC_ERR_INVALID_ARGUMENT);
  netocc_word_free(w);
}

TEST(CApiTest, Verification) {
  netocc_result* r = nullptr;
  ASSERT_EQ(netocc_verify_fibonacci(8, &r), NETOCC_OK);
  EXPECT_EQ(netocc_result_passed(r), 1);
  const json j = json::parse(netocc_result_json(r));
  EXPECT_EQ(j["orders"][0]["order"], 7);
  EXPECT_TRUE(j["orders"][0]["claims"].is_object());
  netocc_result_free(r);

  EXPECT_EQ(netocc_verify_thue_morse(4, &r), NETOCC_ERR_DOMAIN);
  ASSERT_EQ(netocc_verify_onoc_random(42, 50, 16, &r), NETOCC_OK);
  EXPECT_EQ(netocc_result_passed(r), 1);
  netocc_result_free(r);
  ASSERT_EQ(netocc_verify_onoc_exhaustive(6, &r), NETOCC_OK);
  EXPECT_EQ(json::parse(netocc_result_json(r))["samples"], 126);
  netocc_result_free(r);
}

}  // namespace
