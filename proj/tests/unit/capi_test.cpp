// SPDX-License-Identifier: Apache-2.0
// Exercises the shared library through the C header only.
#include "floer_rings/floer_rings.h"

#include <cstring>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

std::string render(const fr_report* rep, fr_format f) {
  char* s = nullptr;
  EXPECT_EQ(fr_report_render(rep, f, 0, &s), FR_OK);
  std::string out = s ? s : "";
  fr_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(fr_version(), "1.0.0");
  EXPECT_STREQ(fr_status_name(FR_OK), "Ok");
  EXPECT_NE(std::strlen(fr_status_name(FR_ERR_PARSE)), 0u);
}

TEST(CApi, FloerHandle) {
  fr_floer* f = nullptr;
  ASSERT_EQ(fr_floer_build(3, nullptr, &f), FR_OK);
  int g = 0;
  ASSERT_EQ(fr_floer_genus(f, &g), FR_OK);
  EXPECT_EQ(g, 3);
  int rank = 0;
  ASSERT_EQ(fr_floer_rank(f, 0, 0, &rank), FR_OK);
  EXPECT_EQ(rank, 10);
  ASSERT_EQ(fr_floer_rank(f, 1, 1, &rank), FR_OK);
  EXPECT_EQ(rank, 3);
  ASSERT_EQ(fr_floer_piece_rank(f, 0, 0, 1, &rank), FR_OK);
  EXPECT_EQ(rank, 2);
  EXPECT_EQ(fr_floer_piece_rank(f, 0, 5, 1, &rank), FR_ERR_OUT_OF_RANGE);
  EXPECT_EQ(fr_floer_rank(f, 7, 0, &rank), FR_ERR_OUT_OF_RANGE);
  fr_report* rep = nullptr;
  ASSERT_EQ(fr_floer_report(f, &rep), FR_OK);
  int passed = 0;
  ASSERT_EQ(fr_report_passed(rep, &passed), FR_OK);
  EXPECT_TRUE(passed);
  const Json j = Json::parse(render(rep, FR_FORMAT_JSON));
  EXPECT_EQ(j["command"], "ring-floer");
  EXPECT_EQ(j["results"][0]["check"], "ring.summary");
  fr_report_free(rep);
  fr_floer_free(f);
}

TEST(CApi, PerturbedFloer) {
  fr_perturbation p{3, 1, 11};
  fr_floer* f = nullptr;
  ASSERT_EQ(fr_floer_build(2, &p, &f), FR_OK);
  int rank = 0;
  ASSERT_EQ(fr_floer_rank(f, 0, 0, &rank), FR_OK);
  EXPECT_EQ(rank, 4);
  fr_report* rep = nullptr;
  ASSERT_EQ(fr_floer_report(f, &rep), FR_OK);
  EXPECT_EQ(Json::parse(render(rep, FR_FORMAT_JSON))["command"], "ring-fukaya-floer");
  fr_report_free(rep);
  fr_floer_free(f);
}

TEST(CApi, ErrorsAndNullArguments) {
  fr_floer* f = nullptr;
  EXPECT_NE(fr_floer_build(0, nullptr, &f), FR_OK);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::strlen(fr_last_error()), 0u);
  EXPECT_EQ(fr_floer_build(2, nullptr, nullptr), FR_ERR_INVALID_ARGUMENT);
  int g = 0;
  EXPECT_EQ(fr_floer_genus(nullptr, &g), FR_ERR_INVALID_ARGUMENT);
  fr_floer_free(nullptr);
  fr_report_free(nullptr);
  fr_string_free(nullptr);
  fr_sympow* s = nullptr;
  EXPECT_NE(fr_sympow_build(2, -1, &s), FR_OK);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(fr_set_threads(0), FR_ERR_INVALID_ARGUMENT);
}

TEST(CApi, SympowBettiBuffer) {
  fr_sympow* s = nullptr;
  ASSERT_EQ(fr_sympow_build(2, 1, &s), FR_OK);
  size_t len = 0;
  int small[2] = {0, 0};
  EXPECT_EQ(fr_sympow_betti(s, small, 2, &len), FR_ERR_OUT_OF_RANGE);
  EXPECT_EQ(len, 3u);
  std::vector<int> buf(len);
  ASSERT_EQ(fr_sympow_betti(s, buf.data(), buf.size(), &len), FR_OK);
  EXPECT_EQ(buf, (std::vector<int>{1, 4, 1}));
  fr_report* rep = nullptr;
  ASSERT_EQ(fr_sympow_report(s, &rep), FR_OK);
  int passed = 0;
  fr_report_passed(rep, &passed);
  EXPECT_TRUE(passed);
  fr_report_free(rep);
  fr_sympow_free(s);
}

TEST(CApi, VerifyAndHomSymm) {
  fr_verify_options o;
  fr_verify_options_init(&o);
  EXPECT_STREQ(o.suite, "all");
  EXPECT_EQ(o.genus_max, 5);
  o.suite = "fin";
  o.genus_max = 3;
  fr_report* rep = nullptr;
  ASSERT_EQ(fr_verify(&o, &rep), FR_OK);
  size_t n = 0;
  ASSERT_EQ(fr_report_result_count(rep, &n), FR_OK);
  EXPECT_EQ(n, 6u);  // k = 0..g-1 for g = 1..3
  fr_report_free(rep);
  o.suite = "bogus";
  EXPECT_EQ(fr_verify(&o, &rep), FR_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(fr_hom_symm(3, 1, 0, &rep), FR_OK);
  int passed = 0;
  fr_report_passed(rep, &passed);
  EXPECT_TRUE(passed);
  fr_report_free(rep);
}

TEST(CApi, Adjunction) {
  fr_adjunction_case c;
  fr_adjunction_case_init(&c);
  c.genus = 3;
  c.odd_class = 1;
  c.k_dot_sigma = 4;
  c.has_d_b = 1;
  c.d_b = 0;
  fr_report* rep = nullptr;
  ASSERT_EQ(fr_adjunction_evaluate(&c, 0, &rep), FR_OK);
  int passed = 0;
  fr_report_passed(rep, &passed);
  EXPECT_TRUE(passed);
  fr_report_free(rep);
  c.d_b = 1;
  ASSERT_EQ(fr_adjunction_evaluate(&c, 0, &rep), FR_OK);
  fr_report_passed(rep, &passed);
  EXPECT_FALSE(passed);
  fr_report_free(rep);
  c.k_dot_sigma = 3;
  EXPECT_EQ(fr_adjunction_evaluate(&c, 1, &rep), FR_ERR_INVALID_ARGUMENT);

  const char* csv = "genus,self_int,odd_class,k_dot_sigma,d_b,d_k,l,b1_zero\n3,0,1,4,0,,,0\n2,3,0,1,,,,0\n";
  ASSERT_EQ(fr_adjunction_batch(csv, 0, &rep), FR_OK);
  size_t n = 0;
  fr_report_result_count(rep, &n);
  EXPECT_EQ(n, 2u);
  fr_report_free(rep);
  EXPECT_EQ(fr_adjunction_batch("nonsense", 0, &rep), FR_ERR_PARSE);
}

TEST(CApi, RenderParseRoundTrip) {
  fr_report* rep = nullptr;
  ASSERT_EQ(fr_hom_symm(2, 0, 1, &rep), FR_OK);
  ASSERT_EQ(fr_report_set_input(rep, "{\"note\": 1}"), FR_OK);
  const std::string json = render(rep, FR_FORMAT_JSON);
  EXPECT_EQ(Json::parse(json)["input"]["note"], 1);
  fr_report* back = nullptr;
  ASSERT_EQ(fr_report_parse(json.c_str(), &back), FR_OK);
  EXPECT_EQ(render(back, FR_FORMAT_JSON), json);
  EXPECT_EQ(render(back, FR_FORMAT_CSV).rfind("check,pass,data,witness", 0), 0u);
  EXPECT_NE(render(back, FR_FORMAT_TEXT).find("PASS"), std::string::npos);
  EXPECT_EQ(fr_report_parse("{not json", &back), FR_ERR_PARSE);
  EXPECT_EQ(fr_report_set_input(rep, "[1]"), FR_ERR_INVALID_ARGUMENT);
  fr_report_free(back);
  fr_report_free(rep);
}
