#include "oracles/brute.hpp"
#include "oracles/eigen_oracle.hpp"
#include "selfloop/construct.hpp"
#include "selfloop/errors.hpp"
#include "selfloop/families.hpp"
#include "selfloop/invariants.hpp"
#include "support/random_graphs.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace selfloop {
namespace {

TEST(Energy, Examples) {
    const auto k2 = energy(family("kn_sigma", {.n = 2, .sigma = 1}));
    EXPECT_NEAR(k2.value, std::sqrt(5.0), 1e-12);
    EXPECT_EQ(k2.center, Rational(1, 2));
    EXPECT_NEAR(energy(make_looped(complete_graph(3))).value, 4.0, 1e-12);
    const auto hat = energy(family("kn_hat", {.n = 3}));
    EXPECT_NEAR(hat.value, 4.0, 1e-12);
    EXPECT_EQ(hat.center, Rational(1));
}

TEST(Energy, RejectsEmptyGraph) { EXPECT_THROW(energy(make_looped(SimpleGraph(0))), DomainError); }

TEST(Energy, CenterIsTheMeanEigenvalue) {
    testgen::GraphSource source(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gs = source.looped(1, 15);
        const auto e = energy(gs);
        // Σ(λ − σ/n) = 0, so the positive and negative parts each carry half the energy.
        double positive = 0.0;
        for (double x : e.spectrum.values)
            positive += std::max(0.0, x - to_double(e.center));
        EXPECT_NEAR(2.0 * positive, e.value, 1e-9);
        const auto theirs = oracle::eigen_eigenvalues(oracle::to_dense(oracle::adjacency_from_definition(gs)),
                                                      gs.order());
        double reference = 0.0;
        for (double x : theirs)
            reference += std::abs(x - static_cast<double>(gs.sigma()) / gs.order());
        EXPECT_NEAR(e.value, reference, 1e-8);
    }
}

TEST(TraceIdentities, Examples) {
    const auto t = trace_identities(family("kn_sigma", {.n = 2, .sigma = 1}));
    EXPECT_TRUE(t.holds);
    EXPECT_NEAR(t.sum, 1.0, 1e-12);
    EXPECT_NEAR(t.sum_of_squares, 3.0, 1e-12);
    EXPECT_EQ(t.expected_sum, 1);
    EXPECT_EQ(t.expected_sum_of_squares, 3);

    const auto tri = trace_identities(family("kn_hat", {.n = 3}));
    EXPECT_EQ(tri.expected_sum, 3);
    EXPECT_EQ(tri.expected_sum_of_squares, 9);
    EXPECT_TRUE(tri.holds);
}

TEST(TraceIdentities, RejectForeignSpectrum) {
    const auto gs = family("kn_sigma", {.n = 3, .sigma = 1});
    Spectrum wrong;
    wrong.values = {2.0, -1.0, -1.0};
    EXPECT_FALSE(trace_identities(gs, wrong).holds);
    EXPECT_THROW(require_trace_identities(gs, wrong), NumericError);
}

TEST(TraceIdentities, HoldOnRandomInstances) {
    testgen::GraphSource source(6);
    for (int trial = 0; trial < 200; ++trial)
        EXPECT_TRUE(trace_identities(source.looped(1, 20)).holds);
}

TEST(Zagreb, Examples) {
    const auto z = zagreb(make_looped(complete_multipartite_graph({3, 2})));
    EXPECT_EQ(z.m1_base, 30);
    EXPECT_EQ(z.m1_looped, 30);
    const auto s = zagreb(family("k32_s"));
    EXPECT_EQ(s.m1_base, 30);
    EXPECT_EQ(s.m1_looped, 3 * 16 + 2 * 9);
    EXPECT_EQ(degree_deviation(path_graph(3)), Rational(4, 3));
    EXPECT_EQ(degree_deviation(complete_graph(5)), 0);
    EXPECT_EQ(degree_deviation(SimpleGraph(0)), 0);
}

TEST(Zagreb, LoopShiftIdentity) {
    testgen::GraphSource source(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto gs = source.looped(1, 14);
        long long looped_degree_sum = 0;
        for (int v : gs.loops().members())
            looped_degree_sum += gs.base().degree(v);
        const auto z = zagreb(gs);
        EXPECT_EQ(z.m1_looped, z.m1_base + 4 * looped_degree_sum + 4LL * gs.sigma());
    }
}

TEST(Zagreb, DeviationMatchesFloatingSum) {
    testgen::GraphSource source(14);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = source.graph(source.order(1, 14), 0.3);
        double expected = 0.0;
        for (int d : g.degrees())
            expected += std::abs(d - 2.0 * g.size() / g.order());
        EXPECT_NEAR(to_double(degree_deviation(g)), expected, 1e-9);
    }
}

TEST(Interlacing, SingleVertexOfLoopedK2) {
    const auto gs = family("kn_sigma", {.n = 2, .sigma = 1});
    const std::vector<int> keep{0};
    const auto v = check_interlacing(gs, keep);
    EXPECT_TRUE(v.holds);
    ASSERT_EQ(v.induced.size(), 1u);
    EXPECT_NEAR(v.induced[0], 1.0, 1e-12);
}

TEST(Interlacing, HoldsForRandomInducedSubgraphs) {
    testgen::GraphSource source(21);
    for (int trial = 0; trial < 150; ++trial) {
        const auto gs = source.looped(2, 14);
        std::vector<int> keep;
        for (int v = 0; v < gs.order(); ++v)
            if (source.coin(0.6))
                keep.push_back(v);
        if (keep.empty())
            keep.push_back(0);
        const auto verdict = check_interlacing(gs, keep);
        EXPECT_TRUE(verdict.holds) << "worst excess " << verdict.worst_excess;
        EXPECT_LE(verdict.worst_excess, 1e-9);
    }
}

TEST(ShiftInterlacing, Endpoints) {
    const auto none = check_shift_interlacing(cycle_graph(6), LoopSet{});
    EXPECT_TRUE(none.lower_holds);
    EXPECT_TRUE(none.upper_holds);
    EXPECT_LE(none.lower_gap, 1e-12);
    EXPECT_TRUE(none.equality_chains_hold);

    const auto full = check_shift_interlacing(cycle_graph(6), LoopSet::all(6));
    EXPECT_LE(full.upper_gap, 1e-12);
    EXPECT_TRUE(full.equality_chains_hold);
}

TEST(ShiftInterlacing, HoldsForRandomLoopSets) {
    testgen::GraphSource source(22);
    for (int trial = 0; trial < 200; ++trial) {
        const auto gs = source.looped(1, 16);
        const auto r = check_shift_interlacing(gs.base(), gs.loops());
        EXPECT_TRUE(r.lower_holds);
        EXPECT_TRUE(r.upper_holds);
        EXPECT_TRUE(r.equality_chains_hold);
    }
}

TEST(ShiftInterlacing, DetectsBrokenChain) {
    Spectrum base;
    base.values = {2.0, 0.0};
    Spectrum looped;
    looped.values = {3.5, 0.5};
    const auto r = check_shift_interlacing(base, looped, 1);
    EXPECT_FALSE(r.upper_holds);
    EXPECT_NEAR(r.upper_excess, 0.5, 1e-12);
}

TEST(NgEnergyForms, Examples) {
    const auto f = ng_energy_closed_forms(2, 1);
    EXPECT_NEAR(f.lower, 2.0 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(f.upper, 4.0 * std::sqrt(3.0), 1e-12);
    for (int n = 2; n <= 10; ++n) {
        const auto g = ng_energy_closed_forms(n, 0);
        EXPECT_NEAR(g.upper, 2.0 * std::sqrt(2.0) * n * (n - 1), 1e-9);
        EXPECT_NEAR(g.lower, 2.0 * (n - 1), 1e-9);
    }
    EXPECT_THROW(ng_energy_closed_forms(1, 0), DomainError);
    EXPECT_THROW(ng_energy_closed_forms(4, 5), DomainError);
}

TEST(NgEnergyForms, SimplificationIsExact) {
    for (int n = 2; n <= 40; ++n)
        for (int sigma = 0; sigma <= n; ++sigma) {
            const auto general = ng_energy_lower_exact(n, sigma);
            const auto simplified = ng_energy_lower_simplified_exact(n, sigma);
            EXPECT_TRUE(general == simplified) << "n=" << n << " sigma=" << sigma;
            const auto f = ng_energy_closed_forms(n, sigma);
            EXPECT_NEAR(general.to_double(), f.lower, 1e-9 * n);
            EXPECT_NEAR(f.lower_simplified, f.lower, 1e-9 * n);
        }
}

TEST(NgEnergyForms, LowerEndpointIsAuxMatrixEnergy) {
    for (int n = 2; n <= 20; ++n)
        for (int sigma = 0; sigma <= n; ++sigma) {
            const auto spectrum = eig_sym(ng_energy_aux_matrix(n, sigma));
            double total = 0.0;
            for (double x : spectrum.values)
                total += std::abs(x);
            EXPECT_NEAR(total, ng_energy_closed_forms(n, sigma).lower, 1e-8) << n << "," << sigma;
            EXPECT_LE(multiset_distance(spectrum.values, ng_aux_closed_form_spectrum(n, sigma)), 1e-9);
        }
}

TEST(QuadraticSurdArithmetic, SignAndEquality) {
    const auto r2 = QuadraticSurd::root(2);
    EXPECT_EQ((r2 - QuadraticSurd::rational(Rational(3, 2), 2)).sign(), -1);
    EXPECT_EQ((r2 - QuadraticSurd::rational(Rational(7, 5), 2)).sign(), 1);
    EXPECT_EQ(QuadraticSurd::root(4).sign(), 1);
    EXPECT_TRUE(QuadraticSurd::root(4) == QuadraticSurd::rational(2, 4));
    EXPECT_TRUE((r2 + r2) == Rational(2) * r2);
    EXPECT_NEAR(r2.to_double(), std::sqrt(2.0), 1e-15);
}

} // namespace
} // namespace selfloop
