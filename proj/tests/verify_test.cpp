#include "ringgraph/verify.hpp"

#include <gtest/gtest.h>

#include "ringgraph/lambda.hpp"
#include "ringgraph/numtheory.hpp"

namespace ringgraph::verify {
namespace {

std::uint64_t brute_count(const std::string& descriptor, bool unital) {
  return compressed_graph(*build_ring(parse_descriptor(descriptor)), unital).vertex_count();
}

TEST(Field, Predictions) {
  EXPECT_EQ(predict_field(2, 6, true).vertices, 4u);
  EXPECT_EQ(predict_field(2, 6, false).vertices, 5u);
  EXPECT_EQ(predict_field(7, 1, true).vertices, 1u);
  EXPECT_EQ(predict_field(2, 6, true).structure->realize(), complete_with_loops(4));
  EXPECT_EQ(*predict_field(2, 6, true).weights, (std::vector<std::uint64_t>{54, 6, 2, 2}));
  EXPECT_EQ(*predict_field(2, 6, false).weights, (std::vector<std::uint64_t>{54, 6, 2, 1, 1}));
  EXPECT_EQ(*predict_field(3, 2, false).weights, (std::vector<std::uint64_t>{6, 2, 1}));
}

TEST(Field, WeightsSumToOrder) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t n = 1; n <= 8; ++n)
      for (bool unital : {false, true}) {
        const auto pred = predict_field(p, n, unital);
        std::uint64_t total = 0;
        for (auto w : *pred.weights) total += w;
        EXPECT_EQ(total, numtheory::checked_pow(p, n));
        EXPECT_EQ(pred.weights->size(), pred.vertices);
      }
}

TEST(Products, CaseFormulas) {
  EXPECT_EQ(predict_product_counts(2, 2, 2, 2).v1, 6u);
  EXPECT_EQ(predict_product_counts(2, 1, 3, 1), (VertexCounts{1, 4}));
  EXPECT_EQ(predict_product_counts(3, 2, 3, 2).v1, 7u);
}

// v(R x S) = v(R) v(S) when the characteristics are coprime.
TEST(Products, CoprimeIsMultiplicative) {
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (std::uint32_t m = 1; m <= 6; ++m) {
      const auto counts = predict_product_counts(2, n, 3, m);
      EXPECT_EQ(counts.v1, predict_field(2, n, true).vertices * predict_field(3, m, true).vertices);
      EXPECT_EQ(counts.v, predict_field(2, n, false).vertices * predict_field(3, m, false).vertices);
    }
}

TEST(Products, BruteForce) {
  for (auto [p, n, q, m] : {std::tuple{2u, 2u, 2u, 2u}, {2u, 1u, 2u, 1u}, {2u, 2u, 2u, 4u}, {2u, 1u, 2u, 3u},
                           {3u, 2u, 3u, 2u}, {3u, 1u, 3u, 1u}, {2u, 2u, 3u, 1u}, {5u, 1u, 5u, 2u}}) {
    const std::string d = "prod:(gf:" + std::to_string(p) + "^" + std::to_string(n) + ",gf:" + std::to_string(q) + "^" +
                          std::to_string(m) + ")";
    const auto counts = predict_product_counts(p, n, q, m);
    EXPECT_EQ(brute_count(d, true), counts.v1) << d;
    EXPECT_EQ(brute_count(d, false), counts.v) << d;
  }
}

TEST(Polyquot, Formulas) {
  EXPECT_EQ(predict_polyquot_counts(2, 1), (VertexCounts{2, 4}));
  EXPECT_EQ(predict_polyquot_counts(2, 2).v1, 6u);
  EXPECT_EQ(predict_polyquot_counts(3, 1).v1, 2u);  // GF(3) and the whole ring
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {2u, 3u}, {5u, 1u}, {3u, 2u}}) {
    const std::string d = "polyquot:gf:" + std::to_string(p) + "^" + std::to_string(n);
    const auto counts = predict_polyquot_counts(p, n);
    EXPECT_EQ(brute_count(d, true), counts.v1) << d;
    EXPECT_EQ(brute_count(d, false), counts.v) << d;
  }
}

// Clique sizes are differences of the smaller rings' counts.
TEST(Matrix, CliqueSizesFromSubringCounts) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const auto field1 = predict_field(p, n, true).vertices, field0 = predict_field(p, n, false).vertices;
      const auto prod = predict_product_counts(p, n, p, n);
      const auto poly = predict_polyquot_counts(p, n);
      EXPECT_EQ(clique_a(p, n), prod.v1 - field1);
      EXPECT_EQ(clique_a_nonunital(p, n), prod.v - field0);
      EXPECT_EQ(clique_b(p, n), poly.v1 - field1);
      EXPECT_EQ(clique_b_nonunital(p, n), poly.v - field0);
      EXPECT_EQ(clique_c(n), predict_field(p, 2 * n, true).vertices - field1);
    }
}

TEST(Matrix, PredictionExamples) {
  EXPECT_EQ(predict_m2(2, 1, true).vertices, 8u);
  EXPECT_EQ(predict_m2(2, 1, false).vertices, 15u);
  EXPECT_EQ(predict_m2(2, 2, false).vertices, 114u);
  EXPECT_EQ(predict_m2(2, 2, true).vertices, 68u);
  for (bool unital : {false, true}) {
    const auto pred = predict_m2(3, 1, unital);
    EXPECT_EQ(pred.structure->vertex_count(), pred.vertices);
  }
}

// Row polynomials of the small-field table.
TEST(Matrix, TableRows) {
  EXPECT_EQ(predict_table1(2, 1), (VertexCounts{8, 15}));
  EXPECT_EQ(predict_table1(2, 2), (VertexCounts{68, 114}));
  EXPECT_EQ(predict_table1(3, 1), (VertexCounts{14, 31}));
  EXPECT_EQ(predict_table1(5, 1), (VertexCounts{32, 69}));
  EXPECT_EQ(predict_table1(3, 2), (VertexCounts{313, 534}));
  EXPECT_THROW(predict_table1(2, 3), std::invalid_argument);
  EXPECT_THROW(predict_table1(4, 1), std::invalid_argument);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t n : {1u, 2u}) {
      const auto row = predict_table1(p, n);
      EXPECT_EQ(row.v1, predict_m2(p, n, true).vertices) << p << "^" << n;
      EXPECT_EQ(row.v, predict_m2(p, n, false).vertices) << p << "^" << n;
    }
}

TEST(Matrix, BruteForceSmall) {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const std::string d = "m2:gf:" + std::to_string(p) + "^" + std::to_string(n);
    for (bool unital : {false, true}) {
      const auto cg = compressed_graph(*build_ring(parse_descriptor(d)), unital);
      const auto pred = predict_m2(p, n, unital);
      EXPECT_EQ(cg.vertex_count(), pred.vertices) << d;
      EXPECT_TRUE(is_isomorphic(cg.graph.graph, pred.structure->realize())) << d;
    }
  }
}

TEST(Predict, Dispatch) {
  EXPECT_EQ(predict(parse_descriptor("zmod:7"), true).vertices, 1u);
  EXPECT_EQ(predict(parse_descriptor("prod:(gf:2^2,gf:2^2)"), true).vertices, 6u);
  EXPECT_EQ(predict(parse_descriptor("unitalize:(m2:gf:2^1)"), true).vertices, 15u);
  EXPECT_THROW(predict(parse_descriptor("zmod:12"), true), std::invalid_argument);
  EXPECT_THROW(predict(parse_descriptor("unitalize:(gf:2^1)"), false), std::invalid_argument);
  EXPECT_THROW(predict(parse_descriptor("prod:(m2:gf:2^1,gf:2^1)"), true), std::invalid_argument);
}

TEST(Harness, RunsAndReports) {
  const auto report = run_verification({{"m2:gf:2^1", true, true}, {"gf:2^6", false}, {"polyquot:gf:3^1", true}}, true);
  ASSERT_EQ(report.cases.size(), 3u);
  EXPECT_TRUE(report.pass()) << report.to_table();
  EXPECT_EQ(report.cases[0].predicted, 8u);
  EXPECT_EQ(*report.cases[0].structure_ok, true);
  EXPECT_EQ(*report.cases[1].weights_ok, true);
  const auto j = report.to_json();
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["cases"].size(), 3u);
  EXPECT_EQ(j["cases"][0]["ring"], "m2:gf:2^1");
  EXPECT_NE(report.to_table().find("PASS 3 cases"), std::string::npos);
}

TEST(Harness, ErrorsFailTheCase) {
  const auto report = run_verification({{"zmod:12", true}, {"m2:gf:3^3", true}}, false);
  EXPECT_FALSE(report.pass());
  EXPECT_FALSE(report.cases[0].error.empty());
  EXPECT_FALSE(report.cases[1].error.empty());
}

TEST(Harness, Suites) {
  EXPECT_EQ(suite_cases("table1").size(), 10u);
  EXPECT_THROW(suite_cases("bogus"), std::invalid_argument);
  EXPECT_LT(suite_cases("fields", 100).size(), suite_cases("fields").size());
  EXPECT_GT(suite_cases("all").size(), suite_cases("m2").size());
}

TEST(Ratios, FromClosedForm) {
  const auto rows = asymptotic_ratios(2, 3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].v1, 8u);
  EXPECT_DOUBLE_EQ(rows[0].ratio, 8.0 / 2.0);
  EXPECT_DOUBLE_EQ(rows[1].ratio, 68.0 / (0.5 * 3 * 16));
}

}  // namespace
}  // namespace ringgraph::verify
