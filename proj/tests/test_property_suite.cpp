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

#include <set>

#include "support.hpp"

using namespace frobtest;

namespace {

PropertyInstance instance(std::string kind, Boundary d1, Boundary d2, Ideal a, Ideal b, Rational s, Rational t,
                          std::size_t j = 0) {
    Budget budget = Budget::defaults_for(d1.ring().p());
    return PropertyInstance{std::move(kind), std::move(d1), std::move(d2), std::move(a), std::move(b), s, t, j, budget};
}

}  // namespace

TEST(Restriction, SpecExamples) {
    Ring r2 = rxy(2);
    auto a = run_case(instance("restriction", B(r2, {{"y", Q(1)}}), Boundary(r2), I(r2, {"x", "y"}), Ideal::unit(r2),
                               Q(1), Q(3, 2), 1));
    EXPECT_EQ(a.outcome, Outcome::pass);
    ASSERT_TRUE(a.lhs && a.rhs);
    EXPECT_EQ(a.lhs->to_strings(), std::vector<std::string>{"x"});

    auto b = run_case(instance("restriction", B(r2, {{"y", Q(1)}}), Boundary(r2), Ideal::unit(r2), Ideal::unit(r2),
                               Q(1), Q(1), 1));
    EXPECT_EQ(b.outcome, Outcome::pass);
    EXPECT_TRUE(b.lhs->is_unit());

    Ring r3 = rxy(3);
    auto c = run_case(instance("restriction", B(r3, {{"y", Q(1)}, {"x", Q(1, 2)}}), Boundary(r3), Ideal::unit(r3),
                               Ideal::unit(r3), Q(1), Q(1), 1));
    EXPECT_EQ(c.outcome, Outcome::pass);
    EXPECT_TRUE(c.lhs->is_unit());
}

TEST(Restriction, HypothesisSkips) {
    Ring r = rxy(3);
    // Round-down is not the hyperplane.
    auto a = run_case(instance("restriction", B(r, {{"x+y", Q(1)}}), Boundary(r), Ideal::unit(r), Ideal::unit(r), Q(1),
                               Q(1), 1));
    EXPECT_EQ(a.outcome, Outcome::skip);
    EXPECT_EQ(a.reason, SkipReason::hyperplane_not_round_down);
    // Period divisible by p.
    auto b = run_case(instance("restriction", B(r, {{"y", Q(1)}, {"x", Q(1, 3)}}), Boundary(r), Ideal::unit(r),
                               Ideal::unit(r), Q(1), Q(1), 1));
    EXPECT_EQ(b.reason, SkipReason::r_divisible_by_p);
}

TEST(SubadditivityDiv, SpecExamples) {
    Ring r = rxy(3);
    auto a = run_case(instance("subadditivity-div", B(r, {{"x", Q(1)}}), B(r, {{"y", Q(1)}}), Ideal::unit(r),
                               Ideal::unit(r), Q(1), Q(1)));
    EXPECT_EQ(a.outcome, Outcome::pass);
    EXPECT_EQ(*a.lhs, Ideal::maximal(r));
    EXPECT_TRUE(a.rhs->is_unit());

    Ring r5 = rxy(5);
    auto b = run_case(instance("subadditivity-div", Boundary(r5), Boundary(r5), Ideal::maximal(r5),
                               Ideal::maximal(r5), Q(1), Q(1)));
    EXPECT_EQ(b.outcome, Outcome::pass);

    auto c = run_case(instance("subadditivity-div", Boundary(r5), Boundary(r5), Ideal::unit(r5), Ideal::unit(r5),
                               Q(1), Q(1)));
    EXPECT_EQ(c.outcome, Outcome::pass);
    EXPECT_TRUE(c.lhs->is_unit());
}

TEST(SubadditivityM, SpecExamples) {
    Ring r = rxy(3);
    auto a = run_case(instance("subadditivity-m", Boundary(r), Boundary(r), Ideal::maximal(r), Ideal::maximal(r),
                               Q(1), Q(1)));
    EXPECT_EQ(a.outcome, Outcome::pass);
    auto b = run_case(instance("subadditivity-m", Boundary(r), Boundary(r), Ideal::unit(r), I(r, {"x^2", "y^3"}),
                               Q(1), Q(3, 2)));
    EXPECT_EQ(b.outcome, Outcome::pass);
    auto c = run_case(instance("subadditivity-m", Boundary(r), Boundary(r), Ideal::unit(r), Ideal::unit(r), Q(1),
                               Q(1)));
    EXPECT_EQ(c.outcome, Outcome::pass);
    EXPECT_TRUE(c.lhs->is_unit());
}

TEST(SubadditivityM, RealLambdaNeeded) {
    // x^3 y^4 on the left is only covered with lambda strictly between 1/2 and 1.
    Ring r = rxy(5);
    auto a = run_case(instance("subadditivity-m", Boundary(r), Boundary(r), I(r, {"x^2*y"}), I(r, {"x^2*y^3"}),
                               Q(1, 3), Q(3, 2)));
    EXPECT_EQ(a.outcome, Outcome::pass);
}

TEST(BasicAndCorollary, HandInstances) {
    Ring r = rxy(3);
    auto a = run_case(instance("basic2", B(r, {{"x", Q(1, 2)}}), B(r, {{"y", Q(1)}}), I(r, {"x", "y^2"}),
                               I(r, {"x^2", "y"}), Q(1), Q(1, 2)));
    EXPECT_EQ(a.outcome, Outcome::pass);
    auto b = run_case(instance("test-cor4", B(r, {{"x", Q(1, 2)}}), B(r, {{"y", Q(1)}}), I(r, {"x", "y^2"}),
                               I(r, {"x^2", "y"}), Q(1), Q(1, 2)));
    EXPECT_EQ(b.outcome, Outcome::pass);
    auto c = run_case(instance("monotonicity", B(r, {{"x", Q(1, 2)}}), B(r, {{"x", Q(1, 3)}}), I(r, {"x^2", "y^2"}),
                               Ideal::maximal(r), Q(1, 2), Q(1)));
    EXPECT_EQ(c.outcome, Outcome::pass);
}

TEST(RunCase, UnknownKind) {
    Ring r = rxy(3);
    EXPECT_THROW(run_case(instance("nope", Boundary(r), Boundary(r), Ideal::unit(r), Ideal::unit(r), Q(1), Q(1))),
                 InvalidInput);
}

TEST(Generator, DeterministicAndCoversKinds) {
    std::set<std::string> kinds;
    for (std::size_t i = 0; i < 12; ++i) {
        PropertyInstance a = generate_instance(42, i), b = generate_instance(42, i);
        EXPECT_EQ(io::to_json(a), io::to_json(b));
        kinds.insert(a.kind);
    }
    EXPECT_EQ(kinds.size(), property_kinds().size());
    EXPECT_NE(io::to_json(generate_instance(1, 0)), io::to_json(generate_instance(2, 0)));
}

TEST(RunSuite, EmptyAndSeedZero) {
    EXPECT_TRUE(run_suite(0, 0).empty());
    auto cases = run_suite(0, 25);
    ASSERT_EQ(cases.size(), 25u);
    SuiteSummary s = summarize(cases);
    EXPECT_EQ(s.fail, 0u);
    for (const auto& c : cases)
        if (c.outcome == Outcome::skip) {
            EXPECT_NE(c.reason, SkipReason::none) << c.name;
        }
}

TEST(RunSuite, OrderedAndReproducible) {
    auto a = run_suite(7, 6, 1), b = run_suite(7, 6, 2);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].outcome, b[i].outcome);
        if (a[i].lhs && b[i].lhs) {
            EXPECT_EQ(*a[i].lhs, *b[i].lhs);
        }
    }
}
