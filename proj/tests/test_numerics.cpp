#include "oracles/berkowitz.hpp"
#include "oracles/brute.hpp"
#include "oracles/eigen_oracle.hpp"
#include "selfloop/charpoly.hpp"
#include "selfloop/construct.hpp"
#include "selfloop/errors.hpp"
#include "selfloop/families.hpp"
#include "selfloop/int_poly.hpp"
#include "selfloop/invariants.hpp"
#include "selfloop/spectrum.hpp"
#include "support/random_graphs.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace selfloop {
namespace {

std::vector<double> values(std::initializer_list<double> xs) { return xs; }

TEST(EigSym, GoldenRatioMatrix) {
    const auto s = eig_sym(SymMatrix(2, {1, 1, 1, 0}));
    const double root5 = std::sqrt(5.0);
    EXPECT_LE(multiset_distance(s.values, values({(1 + root5) / 2, (1 - root5) / 2})), 1e-12);
    EXPECT_GT(s[0], s[1]);
}

TEST(EigSym, Triangle) {
    const auto s = eig_sym(adjacency(complete_graph(3)));
    EXPECT_LE(multiset_distance(s.values, values({2, -1, -1})), 1e-12);
}

TEST(EigSym, Identity) {
    SymMatrix id(4);
    for (int i = 0; i < 4; ++i)
        id.set(i, i, 1);
    EXPECT_LE(multiset_distance(eig_sym(id).values, values({1, 1, 1, 1})), 1e-15);
}

TEST(EigSym, RejectsEmptyMatrix) { EXPECT_THROW(eig_sym(SymMatrix(0)), DomainError); }

TEST(EigSym, IterationCapRaisesNumericError) {
    EigOptions options;
    options.sweep_factor = 0;
    EXPECT_THROW(eig_sym(adjacency(path_graph(6)), options), NumericError);
}

TEST(EigSym, ScaledRationalEntries) {
    // (1/3)·[[2, 1], [1, 2]] has eigenvalues 1 and 1/3.
    const auto s = eig_sym(SymMatrix(2, {2, 1, 1, 2}, 3));
    EXPECT_NEAR(s[0], 1.0, 1e-14);
    EXPECT_NEAR(s[1], 1.0 / 3.0, 1e-14);
}

TEST(EigSym, AgreesWithEigenOnRandomGraphs) {
    testgen::GraphSource source(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const auto gs = source.looped(1, 40);
        const auto a = oracle::adjacency_from_definition(gs);
        const auto ours = eig_sym(adjacency(gs));
        const auto theirs = oracle::eigen_eigenvalues(oracle::to_dense(a), gs.order());
        ASSERT_LE(multiset_distance(ours.values, theirs), 1e-9) << "trial " << trial;
        ASSERT_TRUE(std::is_sorted(ours.values.rbegin(), ours.values.rend()));
    }
}

TEST(EigSym, ResidualAndTraceInvariants) {
    testgen::GraphSource source(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gs = source.looped(1, 30);
        const auto a = adjacency(gs);
        const auto d = eig_sym_vectors(a);
        EXPECT_LE(d.residual, 1e-9 * std::max(1.0, a.norm_inf()));
        EXPECT_NEAR(d.spectrum.sum(), to_double(a.trace()), 1e-9);
        EXPECT_NEAR(d.spectrum.sum_of_squares(), to_double(a.frobenius_squared()), 1e-9 * gs.order());
    }
}

TEST(EigSym, LargerLineGraphs) {
    testgen::GraphSource source(4);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = source.graph(16, 0.8);
        const auto gs = make_looped(std::move(g), source.loops(16));
        const auto lg = line_graph(gs).graph;
        const auto theirs = oracle::eigen_eigenvalues(oracle::to_dense(oracle::adjacency_from_definition(lg)),
                                                      lg.order());
        EXPECT_LE(multiset_distance(eig_sym(adjacency(lg)).values, theirs), 1e-9);
    }
}

TEST(SpectralExtremes, Examples) {
    const auto lg = line_graph(family("kn_hat", {.n = 2})).graph;
    EXPECT_NEAR(min_eigenvalue(adjacency(lg)), -1.0, 1e-12);
    for (int n = 1; n <= 8; ++n)
        EXPECT_NEAR(spectral_radius(adjacency(family("kn_hat", {.n = n}))), n, 1e-12);
    EXPECT_EQ(spectral_radius(SymMatrix(3)), 0.0);
}

TEST(Charpoly, Examples) {
    EXPECT_EQ(charpoly_exact(adjacency(complete_graph(2))), (IntPoly{-1, 0, 1}));
    EXPECT_EQ(charpoly_exact(adjacency(family("kn_hat", {.n = 2}))), (IntPoly{0, -2, 1}));
    EXPECT_EQ(charpoly_exact(adjacency(line_graph(family("kn_hat", {.n = 2})).graph)), (IntPoly{2, -1, -2, 1}));
}

TEST(Charpoly, RejectsNonIntegralMatrix) {
    EXPECT_THROW(charpoly_exact(ng_energy_aux_matrix(3, 1)), DomainError);
}

TEST(Charpoly, AgreesWithBerkowitz) {
    testgen::GraphSource source(55);
    for (int trial = 0; trial < 150; ++trial) {
        const auto gs = source.looped(1, 14);
        const auto ours = charpoly_exact(adjacency(gs));
        EXPECT_EQ(ours, IntPoly(oracle::berkowitz_charpoly(oracle::adjacency_from_definition(gs))));
        EXPECT_EQ(ours, charpoly_exact(adjacency(gs), CharpolyArithmetic::BigIntegerOnly));
    }
}

TEST(Charpoly, LargeEntriesFallBackToBigIntegers) {
    // Entries near 10^6 push the coefficients far past 128 bits.
    std::mt19937_64 rng(12);
    const int n = 12;
    std::vector<std::int64_t> entries(n * n);
    oracle::IntMatrix dense(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const auto x = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
            entries[static_cast<std::size_t>(i * n + j)] = entries[static_cast<std::size_t>(j * n + i)] = x;
            dense[i][j] = dense[j][i] = x;
        }
    const auto p = charpoly_exact(SymMatrix(n, entries));
    EXPECT_GT(boost::multiprecision::msb(boost::multiprecision::abs(p.coefficient(0))), 128u);
    EXPECT_EQ(p, IntPoly(oracle::berkowitz_charpoly(dense)));
    EXPECT_EQ(p, charpoly_exact(SymMatrix(n, entries), CharpolyArithmetic::BigIntegerOnly));
}

TEST(Charpoly, RootsAndNewtonIdentities) {
    testgen::GraphSource source(808);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gs = source.looped(1, 10);
        const auto a = adjacency(gs);
        const auto p = charpoly_exact(a);
        const int n = gs.order();
        ASSERT_EQ(p.degree(), n);
        EXPECT_EQ(p.leading(), 1);
        const double bound = 1e-6 * static_cast<double>(p.l1_norm());
        for (double lambda : eig_sym(a).values)
            EXPECT_LE(std::abs(static_cast<double>(p.evaluate(static_cast<long double>(lambda)))), bound);
        // Newton: c_{n-1} = -p1, c_{n-2} = (p1² - p2)/2 with p1 = trace, p2 = ‖A‖_F².
        const BigInt p1 = gs.sigma();
        const BigInt p2 = 2 * gs.size() + gs.sigma();
        EXPECT_EQ(p.coefficient(n - 1), BigInt(-p1));
        if (n >= 2) {
            EXPECT_EQ(p.coefficient(n - 2), BigInt((p1 * p1 - p2) / 2));
        }
    }
}

TEST(PolyOps, ComposeIdentity) {
    const IntPoly num{-2, -1, 1};
    EXPECT_EQ(compose_rational(IntPoly::identity(), num, IntPoly::identity()), num);
}

TEST(PolyOps, ProductAndPower) {
    EXPECT_EQ((IntPoly::linear_root(1) * IntPoly{-2, -1, 1}), (IntPoly{2, -1, -2, 1}));
    EXPECT_EQ(pow(IntPoly::linear_root(1), 0), IntPoly{1});
    EXPECT_EQ(pow(IntPoly{1, 1}, 3), (IntPoly{1, 3, 3, 1}));
    EXPECT_TRUE((IntPoly{1, 2} + IntPoly{-1, -2}).is_zero());
    EXPECT_EQ(IntPoly{}.degree(), -1);
}

TEST(PolyOps, ComposeMatchesPointEvaluation) {
    testgen::GraphSource source(1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigInt> c;
        const int deg = source.order(0, 6);
        for (int k = 0; k <= deg; ++k)
            c.push_back(source.order(-5, 5));
        const IntPoly p(c);
        const IntPoly num{source.order(-3, 3), source.order(-3, 3), 1};
        const IntPoly den{source.order(1, 3), 1};
        const int d = std::max(p.degree(), 0) + source.order(0, 2);
        const auto composed = compose_rational(p, num, den, d);
        for (long long x = -4; x <= 4; ++x) {
            const BigInt nx = num.evaluate(BigInt(x));
            const BigInt dx = den.evaluate(BigInt(x));
            // den(x)^d · p(num(x)/den(x)) = Σ c_k num^k den^{d-k}
            BigInt expected = 0;
            for (int k = 0; k <= p.degree(); ++k) {
                BigInt term = p.coefficient(k);
                for (int i = 0; i < k; ++i)
                    term *= nx;
                for (int i = k; i < d; ++i)
                    term *= dx;
                expected += term;
            }
            EXPECT_EQ(composed.evaluate(BigInt(x)), expected);
        }
    }
}

TEST(PolyOps, ComposeRejectsBadArguments) {
    EXPECT_THROW(compose_rational(IntPoly{1, 1}, IntPoly::identity(), IntPoly{}), DomainError);
    EXPECT_THROW(compose_rational(IntPoly{1, 1, 1}, IntPoly::identity(), IntPoly{1}, 1), DomainError);
}

// Evaluates both sides of the identity at integer points straight from
// Berkowitz polynomials of the definition-built line graphs.
bool identity_by_evaluation(const SimpleGraph& g) {
    const int n = g.order();
    const int m = g.size();
    const auto plain = oracle::berkowitz_charpoly(oracle::line_adjacency_from_definition(make_looped(g)));
    const auto full =
        oracle::berkowitz_charpoly(oracle::line_adjacency_from_definition(make_looped(g, LoopSet::all(n))));
    const auto eval = [](const std::vector<oracle::Big>& c, const oracle::Big& x) {
        oracle::Big acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    };
    const auto power = [](oracle::Big b, int e) {
        oracle::Big r = 1;
        while (e-- > 0)
            r *= b;
        return r;
    };
    for (int x = 2; x <= m + n + 4; ++x) {
        const oracle::Big lam = x;
        const oracle::Big mu = lam * lam - lam - 2;
        oracle::Big shifted = 0; // λ^m · P_{L(G)}(μ/λ)
        for (int k = 0; k <= m; ++k)
            shifted += plain[static_cast<std::size_t>(k)] * power(mu, k) * power(lam, m - k);
        const auto lhs = power(lam - 1, std::max(m - n, 0)) * eval(full, lam);
        const auto rhs = power(lam - 1, std::max(n - m, 0)) * shifted;
        if (lhs != rhs)
            return false;
    }
    return true;
}

TEST(LineGraphIdentity, K2) {
    const auto r = verify_linegraph_identity(complete_graph(2));
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.lhs, (IntPoly{2, -1, -2, 1}));
    EXPECT_EQ(r.rhs, (IntPoly::linear_root(1) * IntPoly{-2, -1, 1}));
}

TEST(LineGraphIdentity, TriangleAndPath) {
    for (const auto& g : {complete_graph(3), path_graph(3)}) {
        const auto r = verify_linegraph_identity(g);
        EXPECT_TRUE(r.equal);
        EXPECT_TRUE(identity_by_evaluation(g));
    }
}

TEST(LineGraphIdentity, RejectsEdgeless) { EXPECT_THROW(verify_linegraph_identity(SimpleGraph(3)), DomainError); }

TEST(LineGraphIdentity, RandomGraphsIncludingDisconnected) {
    testgen::GraphSource source(9);
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = source.graph(source.order(2, 9), 0.45);
        if (g.size() == 0)
            continue;
        const auto r = verify_linegraph_identity(g);
        ASSERT_EQ(r.equal, identity_by_evaluation(g));
        EXPECT_TRUE(r.equal);
    }
}

TEST(KnSigmaClosedForm, PaperCases) {
    const double r2 = std::sqrt(2.0);
    EXPECT_LE(multiset_distance(closed_form_kn_sigma_spectrum(3, 1), values({1 + r2, -1, 1 - r2})), 1e-12);
    EXPECT_LE(multiset_distance(closed_form_kn_sigma_spectrum(3, 3), values({3, 0, 0})), 1e-12);
    EXPECT_LE(multiset_distance(closed_form_kn_sigma_spectrum(4, 0), values({3, -1, -1, -1})), 1e-12);
    EXPECT_THROW(closed_form_kn_sigma_spectrum(3, 4), DomainError);
}

TEST(KnSigmaClosedForm, MatchesEigensolver) {
    for (int n = 1; n <= 12; ++n)
        for (int sigma = 0; sigma <= n; ++sigma) {
            const auto computed = eig_sym(adjacency(family("kn_sigma", {.n = n, .sigma = sigma})));
            EXPECT_LE(multiset_distance(computed.values, closed_form_kn_sigma_spectrum(n, sigma)), 1e-9)
                << "n=" << n << " sigma=" << sigma;
        }
}

} // namespace
} // namespace selfloop
