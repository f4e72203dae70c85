#pragma once

#include "selfloop/graph.hpp"
#include "selfloop/numeric_types.hpp"
#include "selfloop/spectrum.hpp"
#include "selfloop/surd.hpp"

#include <span>
#include <vector>

namespace selfloop {

/// Σ|λᵢ − σ/n| over the adjacency spectrum of G_S.
struct EnergyValue {
    double value = 0.0;
    Rational center;
    Spectrum spectrum;
};

/// Throws DomainError for the empty graph.
EnergyValue energy(const LoopedGraph& gs);
/// Energy of a precomputed spectrum about an exact center.
double energy_about(const Spectrum& spectrum, const Rational& center);

struct TraceIdentities {
    double sum = 0.0;
    double sum_of_squares = 0.0;
    long long expected_sum = 0;            // σ
    long long expected_sum_of_squares = 0; // 2m + σ
    double tolerance = 0.0;                // 1e-9 · n
    bool holds = false;
};

TraceIdentities trace_identities(const LoopedGraph& gs, const Spectrum& spectrum);
TraceIdentities trace_identities(const LoopedGraph& gs);
/// Throws NumericError when either identity fails.
void require_trace_identities(const LoopedGraph& gs, const Spectrum& spectrum);

struct ZagrebPair {
    long long m1_base = 0;   // Σ d_G(v)²
    long long m1_looped = 0; // Σ d_{G_S}(v)²
};

ZagrebPair zagreb(const LoopedGraph& gs);
/// s(G) = Σ |d_G(v) − 2m/n|, exact.
Rational degree_deviation(const SimpleGraph& g);

struct InterlacingVerdict {
    bool holds = false;
    /// Largest amount by which any inequality is broken (≤ 0 when all hold).
    double worst_excess = 0.0;
    Spectrum host;
    Spectrum induced;
};

/// λ_{n−k+i} ≤ μ_i ≤ λ_i for the subgraph of G_S induced on `vertices` (loops kept).
InterlacingVerdict check_interlacing(const LoopedGraph& gs, std::span<const int> vertices, double tol = 1e-9);

struct ShiftInterlacing {
    /// max_i λ_i(G) − λ_i(G_S); ≤ tol when the lower chain holds.
    double lower_excess = 0.0;
    /// max_i λ_i(G_S) − λ_i(G) − 1; ≤ tol when the upper chain holds.
    double upper_excess = 0.0;
    /// max_i |λ_i(G_S) − λ_i(G)|, relevant at σ = 0.
    double lower_gap = 0.0;
    /// max_i |λ_i(G_S) − λ_i(G) − 1|, relevant at σ = n.
    double upper_gap = 0.0;
    bool lower_holds = false;
    bool upper_holds = false;
    /// Exact-equality chain demanded at σ = 0 (left) and σ = n (right); true when not applicable.
    bool equality_chains_hold = false;
};

ShiftInterlacing check_shift_interlacing(const Spectrum& base, const Spectrum& looped, int sigma, double tol = 1e-9);
ShiftInterlacing check_shift_interlacing(const SimpleGraph& g, const LoopSet& s, double tol = 1e-9);

/// Eigenvalues of (K_n)_S with |S| = σ, descending.
std::vector<double> closed_form_kn_sigma_spectrum(int n, int sigma);

/// Nordhaus–Gaddum energy endpoints for order n and σ loops.
struct NgEnergyForms {
    double lower = 0.0; // L_{n,σ}
    double upper = 0.0; // U_{n,σ}
    double x1 = 0.0;
    double x2 = 0.0;
    /// The simplified lower endpoint valid on σ's half-range.
    double lower_simplified = 0.0;
};

/// Throws DomainError unless n ≥ 2 and 0 ≤ σ ≤ n.
NgEnergyForms ng_energy_closed_forms(int n, int sigma);

/// L_{n,σ} as written in general form, exactly in Q(√((n−2)² + 8σ)).
QuadraticSurd ng_energy_lower_exact(int n, int sigma);
/// The simplified form: n − 4σ/n + √D when σ > n/2, the σ ≤ n/2 form otherwise.
QuadraticSurd ng_energy_lower_simplified_exact(int n, int sigma);

/// Closed-form eigenvalues of the auxiliary matrix with signed multiplicities:
/// 1−2σ/n (σ−1 times), −1−2σ/n (n−σ−1 times), x₁, x₂. A multiplicity of −1
/// cancels one copy of the same value among x₁, x₂ (happens at σ ∈ {0, n}).
std::vector<double> ng_aux_closed_form_spectrum(int n, int sigma);

} // namespace selfloop
