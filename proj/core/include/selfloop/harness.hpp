#pragma once

#include "selfloop/bounds.hpp"
#include "selfloop/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfloop::harness {

/// How the loop set of a random instance is drawn.
struct SigmaPolicy {
    enum class Mode { Uniform, Bernoulli, Fixed, Full };
    Mode mode = Mode::Uniform;
    /// Per-vertex probability for Bernoulli.
    double q = 0.5;
    /// Loop count for Fixed, clipped to the order.
    int fixed = 0;

    /// σ uniform on 0..n, then a uniform σ-subset.
    static SigmaPolicy uniform() { return {}; }
    static SigmaPolicy bernoulli(double q) { return {Mode::Bernoulli, q, 0}; }
    static SigmaPolicy fixed_count(int k) { return {Mode::Fixed, 0.5, k}; }
    static SigmaPolicy full() { return {Mode::Full, 0.5, 0}; }
};

/// Parses `uniform`, `full`, `bernoulli:Q` or `fixed:K`. Throws DomainError.
SigmaPolicy parse_sigma_policy(const std::string& text);
std::string to_string(const SigmaPolicy& policy);

inline constexpr int kMaxExhaustiveOrder = 7;
/// Loop subsets drawn per labeled graph at orders 6 and 7.
inline constexpr int kDefaultLoopSample = 2;

struct CampaignConfig {
    std::uint64_t seed = 1;
    int n_min = 1;
    int n_max = 8;
    std::vector<double> edge_probs{0.2, 0.5, 0.8};
    SigmaPolicy sigma;
    std::uint64_t count = 100;
    /// Bound ids to tally; empty means the whole catalog.
    std::vector<std::string> bounds;
    /// When > 0, replaces the random stream by the exhaustive corpus of orders 1..exhaustive.
    int exhaustive = 0;
    int loop_sample = kDefaultLoopSample;
    int threads = 1;
    bool timestamps = false;
    double tol = kDefaultBoundTolerance;
};

/// Throws DomainError on an inconsistent configuration.
void validate(const CampaignConfig& config);

/// The index-th random instance; depends only on (seed, index) and the shape fields.
LoopedGraph random_instance(const CampaignConfig& config, std::uint64_t index);
std::vector<LoopedGraph> gen_random(const CampaignConfig& config);

/// Labeled graphs of order exactly n times loop sets: all 2^n for n <= 5,
/// `loop_sample` seeded subsets per graph for n = 6, 7. Throws DomainError for
/// n outside 1..7.
std::uint64_t exhaustive_count(int n, int loop_sample = kDefaultLoopSample);
LoopedGraph exhaustive_instance(int n, std::uint64_t index, int loop_sample = kDefaultLoopSample,
                                std::uint64_t seed = 0);
void for_each_exhaustive(int n, const std::function<void(const LoopedGraph&)>& visit,
                         int loop_sample = kDefaultLoopSample, std::uint64_t seed = 0);
std::vector<LoopedGraph> gen_exhaustive(int n, int loop_sample = kDefaultLoopSample, std::uint64_t seed = 0);

struct BoundTally {
    std::string id;
    std::uint64_t holds = 0;
    std::uint64_t equality = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violated = 0;
    std::uint64_t near_tie = 0;
    std::optional<double> min_slack;
    std::string min_slack_witness;
    std::string first_equality_witness;
    std::string first_violation_witness;
    std::string first_near_tie_witness;

    std::uint64_t total() const { return holds + equality + skipped + violated; }
};

/// B15 reaches its σ = 0 bound (−1) or its σ > 0 bound (1).
struct PairBoundWitnesses {
    std::string unlooped;
    std::string looped;
};

struct CampaignReport {
    CampaignConfig config;
    std::uint64_t instances = 0;
    std::vector<BoundTally> tallies;
    /// Hex FNV-1a over the canonical loop lines of the corpus.
    std::string corpus_hash;
    /// Smallest λ_min(L(G_S)) met, and the first instance where it equals −2.
    std::optional<double> line_min_eigenvalue;
    std::string line_min_witness;
    std::string line_min_minus_two_witness;
    PairBoundWitnesses pair_upper_attained;
    double runtime_seconds = 0.0;

    std::uint64_t violations() const;
    std::uint64_t near_ties() const;
    const BoundTally* tally(const std::string& id) const;
};

/// A hard gate (trace identities, B14, B18 with its equality chains, incidence
/// identities) failed on `witness`, a replayable loop line.
class HardGateViolation : public std::runtime_error {
  public:
    HardGateViolation(std::string gate, std::string witness, const std::string& detail);
    const std::string& gate() const { return gate_; }
    const std::string& witness() const { return witness_; }

  private:
    std::string gate_;
    std::string witness_;
};

/// Checks the hard gates on one instance; throws HardGateViolation.
void check_hard_gates(BoundEvaluator& evaluator);

CampaignReport run_campaign(const CampaignConfig& config);

struct OracleReport {
    bool passed = true;
    int cases = 0;
    /// Largest multiset distance between computed and closed-form spectra.
    double worst_spectrum_gap = 0.0;
    /// Largest |Σ|eig(M)| − L_{n,σ}|.
    double worst_energy_gap = 0.0;
    /// Cases where the simplified lower bound differs from the general one in exact arithmetic.
    int simplification_mismatches = 0;
    std::vector<std::string> failures;
};

/// For 2 <= n <= n_max and 0 <= σ <= n: spectrum of ng_energy_aux_matrix against
/// the closed form, its absolute eigenvalue sum against L_{n,σ}, and the
/// simplified L against the general one, exactly.
OracleReport oracle_ng_aux(int n_max, double tol = 1e-9);
/// eig_sym on K_n^σ against the closed-form spectrum for 1 <= n <= n_max.
OracleReport oracle_kn_sigma(int n_max, double tol = 1e-9);

} // namespace selfloop::harness
