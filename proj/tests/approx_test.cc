// Copyright 2026 The DSHP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dshp/approx.hpp"

#include <vector>

#include "dshp/exact.hpp"
#include "dshp/generators.hpp"
#include "dshp/reduction.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

namespace dshp {
namespace {

using ::dshp::testing::uniform_instance;

TEST(DetectThreeValuesTest, TightnessProfile) {
  const auto p = detect_three_values(gen_tightness(0, 1, 2));
  EXPECT_EQ(p.v_small, Rational(0));
  EXPECT_EQ(p.v_medium, Rational(1));
  EXPECT_EQ(p.v_large, Rational(2));
  EXPECT_EQ(p.large_count, 0);
  EXPECT_EQ(p.medium_count, 1);
}

TEST(DetectThreeValuesTest, ReductionProfile) {
  const Instance in =
      build_reduction(testing::octahedron(), {4, Rational(1, 2), Rational(7, 4)});
  const auto p = detect_three_values(in);
  EXPECT_EQ(p.v_small, Rational(1, 2));
  EXPECT_EQ(p.v_medium, Rational(1));
  EXPECT_EQ(p.v_large, Rational(11, 4));
  EXPECT_EQ(p.large_count, 0);
  EXPECT_EQ(p.medium_count, 6);
}

TEST(DetectThreeValuesTest, WrongCardinality) {
  EXPECT_THROW(detect_three_values(testing::small_two_valued()), DomainMismatch);
  EXPECT_THROW(detect_three_values(uniform_instance(1, {1, 2}, {{3}, {4}})),
               DomainMismatch);
}

TEST(SolveApproxTest, TightnessHalf) {
  const Instance in = gen_tightness(0, 1, 2);
  const auto [sol, report] = solve_approx(in);
  EXPECT_EQ(sol.first_stage, std::vector<int>{1});
  EXPECT_EQ(sol.value, Rational(1));
  EXPECT_EQ(report.achieved, Rational(1));
  EXPECT_EQ(report.guarantee, Rational(1, 2));
  EXPECT_EQ(report.certified_lower_bound, Rational(1));
  EXPECT_EQ(sol.value / solve_exact(in).value, Rational(1, 2));
}

TEST(SolveApproxTest, NothingQualifiesForStageOne) {
  // All c_i = V_S: pure second-stage greedy.
  const Instance in = uniform_instance(2, {0, 0, 0}, {{1, 2}, {2, 0}, {0, 1}});
  const auto [sol, report] = solve_approx(in);
  EXPECT_TRUE(sol.first_stage.empty());
  EXPECT_EQ(sol.second_stage, (std::vector<std::vector<int>>{{0, 1}, {0, 2}}));
  EXPECT_EQ(sol.value, complete(in, {}).value);
}

TEST(SolveApproxTest, FullBudget) {
  const Instance in = uniform_instance(3, {2, 0, 1}, {{0, 1}, {2, 2}, {0, 0}});
  const auto [sol, report] = solve_approx(in);
  EXPECT_EQ(sol.first_stage, (std::vector<int>{0, 2}));
  // 2 + 1 now, asset 1 in both scenarios for 2.
  EXPECT_EQ(sol.value, Rational(5));
  EXPECT_EQ(evaluate(in, sol).value, Rational(5));
}

TEST(SolveApproxTest, LargeBeforeMediumWhenOverBudget) {
  const Instance in = uniform_instance(2, {1, 2, 1, 2, 0}, {{0}, {0}, {0}, {0}, {0}});
  const auto [sol, report] = solve_approx(in);
  EXPECT_EQ(sol.first_stage, (std::vector<int>{1, 3}));
  EXPECT_EQ(report.profile.large_count, 2);
  EXPECT_EQ(report.profile.medium_count, 2);
}

TEST(SolveApproxTest, RejectsNegativeValues) {
  const Instance in = uniform_instance(1, {-1, 0}, {{1}, {0}});
  EXPECT_THROW(solve_approx(in), DomainMismatch);
}

TEST(SolveApproxTest, GuaranteeAndFeasibility) {
  Rng rng = make_rng(51);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform_int(rng, 2, 9);
    const Instance in = random_instance(n, uniform_int(rng, 1, 6),
                                        uniform_int(rng, 0, n), ValueKind::kThree,
                                        rng);
    const auto [sol, report] = solve_approx(in);
    EXPECT_TRUE(evaluate(in, sol).matches_recorded);
    EXPECT_GE(sol.value, report.guarantee * solve_exact(in).value);
    for (int i : sol.first_stage) EXPECT_NE(in.c[i], report.profile.v_small);
  }
}

TEST(GenTightnessTest, MatrixAndRatios) {
  const Instance in = gen_tightness(1, 2, 3);
  EXPECT_EQ(in.c, (std::vector<Rational>{1, 2, 1, 1}));
  EXPECT_EQ(in.f, (std::vector<std::vector<Rational>>{
                      {3, 1, 1}, {1, 1, 1}, {1, 3, 1}, {1, 1, 3}}));
  EXPECT_EQ(solve_approx(in).first.value / solve_exact(in).value,
            Rational(2, 3));
  const auto p = detect_three_values(gen_tightness(Rational(1, 2), Rational(3, 4), 1));
  EXPECT_EQ(p.v_small, Rational(1, 2));
  EXPECT_EQ(p.v_large, Rational(1));
  EXPECT_EQ(p.large_count, 0);
  EXPECT_EQ(p.medium_count, 1);
  EXPECT_THROW(gen_tightness(2, 1, 3), InvalidInput);
  EXPECT_THROW(gen_tightness(1, 1, 3), InvalidInput);
}

}  // namespace
}  // namespace dshp
