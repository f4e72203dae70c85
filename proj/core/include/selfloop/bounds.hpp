#pragma once

#include "selfloop/construct.hpp"
#include "selfloop/families.hpp"
#include "selfloop/graph.hpp"
#include "selfloop/spectrum.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selfloop {

inline constexpr double kDefaultBoundTolerance = 1e-7;

enum class BoundKind { Lower, Upper, Sandwich, Strict };
enum class Verdict { Holds, Equality, Violated, Skipped };

std::string_view to_string(BoundKind kind);
std::string_view to_string(Verdict verdict);

/// One entry of the bound catalog. Ids B1..B18 are stable.
struct BoundSpec {
    std::string id;
    std::string name;
    BoundKind kind;
    std::string statement;
};

const std::vector<BoundSpec>& bound_catalog();
/// Throws DomainError for an id outside the catalog.
const BoundSpec& find_bound(std::string_view id);

struct Hypothesis {
    std::string name;
    bool satisfied = false;
};

/// One inequality written as lhs ≤ rhs (strict for Strict bounds); slack = rhs − lhs.
struct BoundSide {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
};

struct BoundReport {
    std::string id;
    BoundKind kind = BoundKind::Upper;
    std::string instance;
    std::vector<Hypothesis> hypotheses;
    /// Empty when skipped. Sandwich bounds carry two sides.
    std::vector<BoundSide> sides;
    /// The side with least slack.
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::Skipped;
    /// Strict bounds only: |slack| within tolerance, so strictness is not certified.
    bool near_tie = false;
    /// B2 only: the bidegreed S-aligned structure that forces equality.
    std::optional<bool> structural_equality;
    /// Set by equality-family certification when a hypothesis gate was waived.
    bool hypothesis_waived = false;

    bool hypotheses_met() const;
};

/// Evaluates catalog entries on one instance, caching every spectrum it needs.
/// Not thread-safe; use one evaluator per worker.
class BoundEvaluator {
  public:
    explicit BoundEvaluator(LoopedGraph gs, double tol = kDefaultBoundTolerance);
    ~BoundEvaluator();
    BoundEvaluator(BoundEvaluator&&) noexcept;
    BoundEvaluator& operator=(BoundEvaluator&&) noexcept;

    const LoopedGraph& instance() const;
    double tolerance() const;

    BoundReport evaluate(std::string_view id);
    /// Evaluates ignoring hypothesis gates (hypotheses are still recorded).
    BoundReport evaluate_ungated(std::string_view id);

    const Spectrum& looped_spectrum();     // G_S
    const Spectrum& base_spectrum();       // G
    const Spectrum& complement_spectrum(); // complement of G_S, same loops
    const Spectrum& line_spectrum();       // L(G_S)
    const Spectrum& base_line_spectrum();  // L(G)

    struct Cache;

  private:
    std::unique_ptr<Cache> cache_;
};

BoundReport evaluate_bound(std::string_view id, const LoopedGraph& gs, double tol = kDefaultBoundTolerance);
/// Every catalog entry, ordered B1..B18.
std::vector<BoundReport> evaluate_all(const LoopedGraph& gs, double tol = kDefaultBoundTolerance);
std::vector<BoundReport> evaluate_selected(const LoopedGraph& gs, std::span<const std::string> ids,
                                           double tol = kDefaultBoundTolerance);

/// Builds the named family and evaluates the bound whose equality case it is.
/// Valid pairs: B7 with kn_sigma; B2 with k32_s; B4 with kn_hat, k32_s and
/// edgeless_full_loop. Hypotheses are recorded but not enforced (the edgeless
/// family is disconnected, K_1 is below the order gate of B7); `hypothesis_waived`
/// says when that mattered. Throws DomainError for any other pair.
BoundReport certify_equality_family(std::string_view id, std::string_view family_name, const FamilyParams& params,
                                    double tol = kDefaultBoundTolerance);

/// Right-hand sides of the catalog, exposed for degeneration checks.
namespace bound_formulas {
double stanley_radius_upper(int m);
double radius_degree_lower(int n, int m, int sigma);
double radius_moment_upper(int n, int m, int sigma);
double nosal_radius_upper(int n, int m);
double radius_zagreb_lower(int n, long long m1_base, int sigma, int min_degree);
double ng_radius_lower(int n, int sigma);
double ng_radius_upper(int n, int sigma);
double nosal_ng_lower(int n);
double nosal_ng_upper(int n);
double ng_radius_degree_spread(int n, int max_degree, int min_degree);
double ng_pair_upper(int sigma);
double ng_pair_lower(double degree_deviation);
} // namespace bound_formulas

} // namespace selfloop
