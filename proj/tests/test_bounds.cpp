#include "selfloop/bounds.hpp"
#include "selfloop/errors.hpp"
#include "selfloop/families.hpp"
#include "support/random_graphs.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace selfloop {
namespace {

TEST(Catalog, HasEighteenStableIds) {
    const auto& catalog = bound_catalog();
    ASSERT_EQ(catalog.size(), 18u);
    for (std::size_t i = 0; i < catalog.size(); ++i)
        EXPECT_EQ(catalog[i].id, "B" + std::to_string(i + 1));
    EXPECT_EQ(find_bound("B14").kind, BoundKind::Lower);
    EXPECT_EQ(find_bound("B13").kind, BoundKind::Strict);
    EXPECT_EQ(find_bound("B17").kind, BoundKind::Sandwich);
    EXPECT_THROW(find_bound("B19"), DomainError);
    EXPECT_THROW(evaluate_bound("b1x", family("kn_hat", {.n = 2})), DomainError);
}

TEST(Catalog, VerdictNames) {
    EXPECT_EQ(to_string(Verdict::Skipped), "skipped-hypothesis");
    EXPECT_EQ(to_string(Verdict::Equality), "equality");
    EXPECT_EQ(to_string(BoundKind::Sandwich), "sandwich");
}

TEST(Bounds, EnergyRadiusEqualityOnLoopedK2) {
    const auto r = evaluate_bound("B7", family("kn_sigma", {.n = 2, .sigma = 1}));
    EXPECT_EQ(r.verdict, Verdict::Equality);
    EXPECT_NEAR(r.lhs, std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(r.rhs, std::sqrt(5.0), 1e-12);
}

TEST(Bounds, DegreeLowerEqualityOnK32) {
    const auto r = evaluate_bound("B2", family("k32_s"));
    EXPECT_EQ(r.verdict, Verdict::Equality);
    EXPECT_NEAR(r.rhs, 3.0, 1e-9);
    ASSERT_TRUE(r.structural_equality.has_value());
    EXPECT_TRUE(*r.structural_equality);
}

TEST(Bounds, ZagrebLowerEqualityOnFullLoopK5) {
    const auto r = evaluate_bound("B4", family("kn_hat", {.n = 5}));
    EXPECT_EQ(r.verdict, Verdict::Equality);
    EXPECT_NEAR(r.lhs, 5.0, 1e-12);
}

TEST(Bounds, PairUpperEqualityOnPlainK2) {
    const auto r = evaluate_bound("B15", make_looped(complete_graph(2)));
    EXPECT_EQ(r.verdict, Verdict::Equality);
    EXPECT_NEAR(r.lhs, -1.0, 1e-12);
    EXPECT_EQ(r.rhs, -1.0);
}

TEST(Bounds, LineGraphMinimumOnFullLoopK2) {
    const auto r = evaluate_bound("B14", family("kn_hat", {.n = 2}));
    EXPECT_EQ(r.verdict, Verdict::Holds);
    EXPECT_NEAR(r.rhs, -1.0, 1e-12);
    EXPECT_NEAR(r.slack, 1.0, 1e-12);
}

TEST(Bounds, AllEighteenOnFullLoopK2) {
    const auto reports = evaluate_all(family("kn_hat", {.n = 2}));
    ASSERT_EQ(reports.size(), 18u);
    for (const auto& r : reports)
        EXPECT_NE(r.verdict, Verdict::Violated) << r.id;
}

TEST(Bounds, DisconnectedBaseSkipsConnectedHypotheses) {
    const auto gs = make_looped(SimpleGraph(4, {{0, 1}, {2, 3}}), LoopSet({0}));
    for (const auto& r : evaluate_all(gs)) {
        const bool needs_connected = r.id == "B2" || r.id == "B4" || r.id == "B5" || r.id == "B8";
        if (needs_connected) {
            EXPECT_EQ(r.verdict, Verdict::Skipped) << r.id;
            EXPECT_FALSE(r.hypotheses_met());
            EXPECT_TRUE(r.sides.empty());
        } else {
            EXPECT_NE(r.verdict, Verdict::Violated) << r.id;
        }
    }
}

TEST(Bounds, StrictBoundExamples) {
    // B13 on a single looped edge: E(L(K2)) = 0 and L(G_S) has both loop-vertices.
    const auto r = evaluate_bound("B13", family("kn_sigma", {.n = 2, .sigma = 1}));
    EXPECT_EQ(r.verdict, Verdict::Holds);
    EXPECT_FALSE(r.near_tie);

    // B11 on an edgeless pair with one loop: E(G − S) = 0 and E(G_S) = 1.
    const auto b11 = evaluate_bound("B11", make_looped(SimpleGraph(2), LoopSet({0})));
    EXPECT_EQ(b11.verdict, Verdict::Holds);
    EXPECT_NEAR(b11.slack, 1.0, 1e-12);
    EXPECT_FALSE(b11.near_tie);
}

TEST(Bounds, SandwichReportsTightestSide) {
    const auto r = evaluate_bound("B17", family("kn_sigma", {.n = 5, .sigma = 2}));
    ASSERT_EQ(r.sides.size(), 2u);
    const double tightest = std::min(r.sides[0].slack, r.sides[1].slack);
    EXPECT_EQ(r.slack, tightest);
}

TEST(Bounds, UngatedEvaluationMarksWaiver) {
    BoundEvaluator ev(make_looped(SimpleGraph(3), LoopSet({1})));
    const auto gated = ev.evaluate("B2");
    EXPECT_EQ(gated.verdict, Verdict::Skipped);
    EXPECT_FALSE(gated.hypothesis_waived);
    const auto ungated = ev.evaluate_ungated("B2");
    EXPECT_NE(ungated.verdict, Verdict::Skipped);
    EXPECT_TRUE(ungated.hypothesis_waived);
    EXPECT_FALSE(ungated.hypotheses_met());
}

TEST(Bounds, SelectedIdsComeBackInCatalogOrder) {
    const std::vector<std::string> ids{"B14", "B1"};
    const auto reports = evaluate_selected(family("k32_s"), ids);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].id, "B1");
    EXPECT_EQ(reports[1].id, "B14");
}

TEST(EqualityFamilies, Certifications) {
    for (int n = 1; n <= 6; ++n)
        for (int sigma = 0; sigma <= n; ++sigma) {
            const auto r = certify_equality_family("B7", "kn_sigma", {.n = n, .sigma = sigma});
            EXPECT_EQ(r.verdict, Verdict::Equality) << n << "," << sigma;
            EXPECT_EQ(r.hypothesis_waived, n == 1);
        }
    EXPECT_EQ(certify_equality_family("B2", "k32_s", {}).verdict, Verdict::Equality);
    EXPECT_EQ(certify_equality_family("B4", "k32_s", {}).verdict, Verdict::Equality);
    EXPECT_EQ(certify_equality_family("B4", "KN_HAT", {.n = 7}).verdict, Verdict::Equality);
    const auto edgeless = certify_equality_family("B4", "edgeless_full_loop", {.n = 4});
    EXPECT_EQ(edgeless.verdict, Verdict::Equality);
    EXPECT_TRUE(edgeless.hypothesis_waived);
}

TEST(EqualityFamilies, RejectsMismatchedPairs) {
    EXPECT_THROW(certify_equality_family("B7", "k32_s", {}), DomainError);
    EXPECT_THROW(certify_equality_family("B1", "kn_hat", {.n = 3}), DomainError);
    EXPECT_THROW(certify_equality_family("B4", "kn_sigma", {.n = 3, .sigma = 1}), DomainError);
}

TEST(Degeneration, SigmaZeroRecoversLooplessForms) {
    for (int n = 2; n <= 16; ++n) {
        for (int m = 0; m <= n * (n - 1) / 2; ++m)
            EXPECT_NEAR(bound_formulas::radius_moment_upper(n, m, 0), bound_formulas::nosal_radius_upper(n, m),
                        1e-12);
        EXPECT_NEAR(bound_formulas::ng_radius_lower(n, 0), bound_formulas::nosal_ng_lower(n), 1e-12);
        EXPECT_NEAR(bound_formulas::ng_radius_upper(n, 0), bound_formulas::nosal_ng_upper(n), 1e-12);
    }
}

TEST(Bounds, FormulaExamples) {
    EXPECT_DOUBLE_EQ(bound_formulas::stanley_radius_upper(1), 2.0);
    EXPECT_DOUBLE_EQ(bound_formulas::stanley_radius_upper(3), 3.0);
    EXPECT_DOUBLE_EQ(bound_formulas::radius_degree_lower(5, 6, 3), 3.0);
    EXPECT_DOUBLE_EQ(bound_formulas::ng_pair_upper(0), -1.0);
    EXPECT_DOUBLE_EQ(bound_formulas::ng_pair_upper(2), 1.0);
    EXPECT_DOUBLE_EQ(bound_formulas::ng_pair_lower(0.0), -1.0);
    // Full-loop K_n: λ1 = n equals the moment bound σ/n + √(2m(n−1)/n) = 1 + (n−1).
    EXPECT_NEAR(bound_formulas::radius_moment_upper(4, 6, 4), 4.0, 1e-12);
}

TEST(Bounds, RandomInstancesHaveNoViolations) {
    testgen::GraphSource source(2718);
    for (int trial = 0; trial < 300; ++trial) {
        const auto gs = source.looped(1, 12);
        for (const auto& r : evaluate_all(gs)) {
            ASSERT_NE(r.verdict, Verdict::Violated) << r.id << " slack " << r.slack;
            if (r.verdict == Verdict::Skipped) {
                EXPECT_FALSE(r.hypotheses_met());
                continue;
            }
            EXPECT_TRUE(r.hypotheses_met());
            EXPECT_NEAR(r.slack, r.rhs - r.lhs, 1e-12);
            EXPECT_EQ(r.verdict == Verdict::Equality, std::abs(r.slack) <= kDefaultBoundTolerance) << r.id;
            if (r.kind != BoundKind::Strict) {
                EXPECT_FALSE(r.near_tie);
            }
        }
    }
}

TEST(Bounds, ConnectedRandomInstancesEvaluateConnectedBounds) {
    testgen::GraphSource source(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = source.order(2, 11);
        auto g = source.connected_graph(n, 0.5);
        const auto gs = make_looped(std::move(g), source.loops(n));
        for (const char* id : {"B2", "B4", "B8"})
            EXPECT_NE(evaluate_bound(id, gs).verdict, Verdict::Skipped) << id;
    }
}

TEST(Bounds, TighterToleranceStillHoldsOnExactCases) {
    // The equality families are exact in floating point up to a few ulps.
    const auto r = evaluate_bound("B4", family("kn_hat", {.n = 9}), 1e-10);
    EXPECT_EQ(r.verdict, Verdict::Equality);
}

} // namespace
} // namespace selfloop
