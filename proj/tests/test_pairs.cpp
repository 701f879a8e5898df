/*
   Copyright 2026 The frobtest Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "support.hpp"

using namespace frobtest;

TEST(Boundary, Invariants) {
    Ring r = rxy(3);
    EXPECT_THROW(B(r, {{"x*y", Q(3, 2)}}), InvalidInput);
    EXPECT_THROW(B(r, {{"x", Q(-1, 2)}}), InvalidInput);
    EXPECT_THROW(B(r, {{"x^2*y", Q(1)}}), InvalidInput);
    EXPECT_THROW(B(r, {{"x", Q(1)}, {"2*x", Q(1, 2)}}), InvalidInput);
    EXPECT_THROW(B(r, {{"1", Q(1)}}), InvalidInput);
    EXPECT_EQ(B(r, {{"x", Q(1, 2)}, {"y", Q(2, 3)}}).period(), 6);
    // x^3 is a p-th power at p = 3: accepted, flagged unknown.
    EXPECT_TRUE(B(r, {{"x^3+y^3", Q(1, 2)}}).has_unknown_squarefree());
}

TEST(Boundary, FloorPart) {
    Ring r = rxy(5);
    Boundary a = B(r, {{"x*y", Q(1)}, {"x+y", Q(1, 2)}});
    Boundary fa = floor_part(a);
    ASSERT_EQ(fa.components().size(), 1u);
    EXPECT_EQ(fa.components()[0].f, P(r, "x*y"));
    EXPECT_TRUE(floor_part(B(r, {{"x", Q(1, 2)}})).empty());
    Boundary both = B(r, {{"x", Q(1)}, {"y", Q(1)}});
    EXPECT_EQ(floor_part(both).to_string(), both.to_string());
}

TEST(Boundary, SumCapsAtOne) {
    Ring r = rxy(5);
    Boundary s = B(r, {{"x", Q(1, 2)}}) + B(r, {{"x", Q(1, 3)}, {"y", Q(1)}});
    EXPECT_EQ(s.to_string(), "5/6*div(x) + 1/1*div(y)");
    EXPECT_THROW(B(r, {{"x", Q(2, 3)}}) + B(r, {{"x", Q(2, 3)}}), InvalidInput);
}

TEST(Multiplier, SpecExamples) {
    Ring r2 = rxy(2);
    EXPECT_EQ(div_multiplier(B(r2, {{"x*y", Q(1)}}), FrobeniusLevel(Prime(2), 3), MultiplierMode::ceil_minus_floor),
              P(r2, "x*y").pow(7));
    Ring r3 = rxy(3);
    EXPECT_EQ(div_multiplier(B(r3, {{"x+y", Q(2, 3)}}), FrobeniusLevel(Prime(3), 2), MultiplierMode::ceil_minus_floor),
              P(r3, "x+y").pow(6));
    EXPECT_EQ(div_multiplier(Boundary(r3), FrobeniusLevel(Prime(3), 2), MultiplierMode::qminus1), P(r3, "1"));
    // floor((q-1) d) against ceil(q d) - floor(d).
    EXPECT_EQ(multiplier_exponent(Q(1, 2), 5, MultiplierMode::qminus1), 2u);
    EXPECT_EQ(multiplier_exponent(Q(1, 2), 5, MultiplierMode::ceil_minus_floor), 3u);
    EXPECT_EQ(multiplier_exponent(Q(1), 5, MultiplierMode::qminus1), 4u);
    EXPECT_EQ(multiplier_exponent(Q(1), 5, MultiplierMode::ceil_minus_floor), 4u);
}

TEST(CeilExponent, SpecExamples) {
    EXPECT_EQ(ceil_exponent(Q(3, 2), 5), 8u);
    EXPECT_EQ(ceil_exponent(Q(1), 8), 8u);
    EXPECT_EQ(ceil_exponent(Q(1, 3), 9), 3u);
}

TEST(PairSpec, Invariants) {
    Ring r = rxy(3);
    Boundary dx = B(r, {{"x", Q(1)}});
    EXPECT_THROW(PairSpec(dx, I(r, {"x^2", "x*y"}), Q(1)), InvalidInput);
    EXPECT_NO_THROW(PairSpec(dx, I(r, {"x^2", "y"}), Q(1)));
    EXPECT_THROW(PairSpec(dx, I(r, {"y"}), Q(0)), InvalidInput);
    EXPECT_THROW(PairSpec(dx, Ideal::zero(r), Q(1)), InvalidInput);
    EXPECT_THROW(PairSpec(dx, Ideal::unit(r), Q(1), Budget{0, kDefaultGbCap, 0}), InvalidInput);
    EXPECT_THROW(PairSpec(dx, I(rxy(5), {"y"}), Q(1)), RingMismatch);
    // A reducible floor component: a may avoid one factor but not all of it.
    Boundary dxy = B(r, {{"x*y", Q(1)}});
    EXPECT_THROW(PairSpec(dxy, I(r, {"x*y^2", "x^2"}), Q(1)), InvalidInput);
    EXPECT_NO_THROW(PairSpec(dxy, I(r, {"x+y"}), Q(1)));
}

TEST(PairSpec, CoefficientFactorsSplitOffOrigin) {
    Ring r = rxy(3);
    PairSpec s(Boundary(r), {{Ideal::maximal(r), Q(1, 2)}, {I(r, {"x^2"}), Q(1)}, {Ideal::maximal(r), Q(1)}},
               Budget::defaults_for(3));
    FrobeniusLevel lv(Prime(3), 2);
    auto [factors, n] = s.coefficient_factors(lv);
    EXPECT_EQ(n, 5u + 9u);
    ASSERT_EQ(factors.size(), 1u);
    EXPECT_EQ(factors[0], I(r, {"x^18"}));
    EXPECT_EQ(s.coefficient_ideal(lv), Ideal::maximal(r).ordinary_power(14) * I(r, {"x^18"}));
}

TEST(TestCandidates, SpecExamples) {
    Ring r2 = rxy(2);
    auto c = default_test_candidates(B(r2, {{"x*y", Q(1)}}));
    EXPECT_NE(std::find(c.begin(), c.end(), P(r2, "x+y")), c.end());
    for (const auto& g : c) EXPECT_TRUE(avoids_round_down(g, B(r2, {{"x*y", Q(1)}}))) << g;
    EXPECT_EQ(std::find(c.begin(), c.end(), P(r2, "y")), c.end());

    auto empty = default_test_candidates(Boundary(r2));
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty[0].is_one());

    Ring r3 = rxy(3);
    auto cx = default_test_candidates(B(r3, {{"x", Q(1)}}));
    ASSERT_FALSE(cx.empty());
    EXPECT_TRUE(cx[0].is_one());
}

TEST(TestCandidates, VanishOnSingularLocus) {
    // div(xyz): every candidate vanishes on the three axes.
    Ring r = ring(5, {"x", "y", "z"});
    auto c = default_test_candidates(B(r, {{"x*y*z", Q(1)}}));
    ASSERT_GE(c.size(), 2u);
    Ideal axes = I(r, {"x*y", "x*z", "y*z"});
    for (const auto& g : c) EXPECT_TRUE(axes.contains(g)) << g;
}

TEST(Certificate, RejectsRoundDownElements) {
    Ring r = rxy(2);
    Boundary d = B(r, {{"x*y", Q(1)}});
    TestElementCertificate bad{P(r, "y"), 1, Evidence::user_asserted};
    EXPECT_THROW(bad.validate(d), InvalidInput);
    TestElementCertificate good{P(r, "x+y"), 2, Evidence::user_asserted};
    EXPECT_NO_THROW(good.validate(d));
}
