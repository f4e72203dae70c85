#include "selfloop/bounds.hpp"

#include "selfloop/errors.hpp"
#include "selfloop/invariants.hpp"
#include "selfloop/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace selfloop {

std::string_view to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::Lower:
        return "lower";
    case BoundKind::Upper:
        return "upper";
    case BoundKind::Sandwich:
        return "sandwich";
    case BoundKind::Strict:
        return "strict";
    }
    return "?";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::Holds:
        return "holds";
    case Verdict::Equality:
        return "equality";
    case Verdict::Violated:
        return "violated";
    case Verdict::Skipped:
        return "skipped-hypothesis";
    }
    return "?";
}

const std::vector<BoundSpec>& bound_catalog() {
    static const std::vector<BoundSpec> catalog = {
        {"B1", "radius_stanley", BoundKind::Upper, "lambda1(G_S) <= (1 + sqrt(1 + 8m)) / 2"},
        {"B2", "radius_degree_lower", BoundKind::Lower, "lambda1(G_S) >= 2m/n + sigma/n  (G connected)"},
        {"B3", "radius_moment_upper", BoundKind::Upper,
         "lambda1(G_S) <= sigma/n + sqrt(sigma(n-1)(n-sigma)/n^2 + 2m(n-1)/n)"},
        {"B4", "radius_zagreb_lower", BoundKind::Lower,
         "lambda1(G_S) >= sqrt(M1(G)/n + sigma(2 delta + 1)/n)  (G connected)"},
        {"B5", "ng_radius_sandwich", BoundKind::Sandwich,
         "n-1+2sigma/n <= lambda1 + lambda1bar <= 2sigma/n + sqrt2 sqrt(2sigma(n-1)(n-sigma)/n^2 + (n-1)^2)"},
        {"B6", "ng_radius_deltadelta", BoundKind::Upper, "lambda1 + lambda1bar <= n + 1 + Delta - delta"},
        {"B7", "energy_vs_radius", BoundKind::Lower, "E(G_S) >= 2 lambda1(G_S) - 2sigma/n"},
        {"B8", "energy_size_lower", BoundKind::Lower, "E(G_S) >= 4m/n  (G connected)"},
        {"B9", "energy_noclique", BoundKind::Lower,
         "E(G_S) >= 2 lambda1(G_S)  (n >= 4, 1 <= sigma <= n/2, S not a clique)"},
        {"B10", "energy_multipartite", BoundKind::Lower, "E(G_S) >= E(G)  (G complete multipartite)"},
        {"B11", "energy_delete_independent", BoundKind::Strict, "E(G - S) < E(G_S)  (S independent)"},
        {"B12", "energy_delete_clique", BoundKind::Strict, "E(G - Q) < E(G_Q)  (Q a clique)"},
        {"B13", "linegraph_energy", BoundKind::Strict, "E(L(G)) < E(L(G_S))  (S non-empty)"},
        {"B14", "linegraph_min_eig", BoundKind::Lower, "lambda_min(L(G_S)) >= -2"},
        {"B15", "ng_pair_upper", BoundKind::Upper,
         "lambda_j(G_S) + lambda_{n-j+2}(complement) <= -1 (sigma = 0) or 1 (sigma > 0)"},
        {"B16", "ng_pair_lower", BoundKind::Lower, "lambda_j(G_S) + lambda_{n-j+2}(complement) >= -1 - 2 sqrt(2 s(G))"},
        {"B17", "ng_energy_sandwich", BoundKind::Sandwich, "L_{n,sigma} <= E(G_S) + E(complement) <= U_{n,sigma}"},
        {"B18", "shift_interlacing", BoundKind::Sandwich, "lambda_i(G) <= lambda_i(G_S) <= lambda_i(G) + 1"},
    };
    return catalog;
}

const BoundSpec& find_bound(std::string_view id) {
    for (const auto& spec : bound_catalog())
        if (spec.id == id)
            return spec;
    throw DomainError("unknown bound id '" + std::string(id) + "'");
}

bool BoundReport::hypotheses_met() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.satisfied; });
}

namespace bound_formulas {

double stanley_radius_upper(int m) { return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * m)); }

double radius_degree_lower(int n, int m, int sigma) { return (2.0 * m + sigma) / n; }

double radius_moment_upper(int n, int m, int sigma) {
    const double nn = n;
    return sigma / nn + std::sqrt(sigma * (nn - 1.0) * (nn - sigma) / (nn * nn) + 2.0 * m * (nn - 1.0) / nn);
}

double nosal_radius_upper(int n, int m) { return std::sqrt(2.0 * m * (n - 1.0) / n); }

double radius_zagreb_lower(int n, long long m1_base, int sigma, int min_degree) {
    return std::sqrt(static_cast<double>(m1_base) / n + sigma * (2.0 * min_degree + 1.0) / n);
}

double ng_radius_lower(int n, int sigma) { return n - 1.0 + 2.0 * sigma / n; }

double ng_radius_upper(int n, int sigma) {
    const double nn = n;
    return 2.0 * sigma / nn +
           std::sqrt(2.0) * std::sqrt(2.0 * sigma * (nn - 1.0) * (nn - sigma) / (nn * nn) + (nn - 1.0) * (nn - 1.0));
}

double nosal_ng_lower(int n) { return n - 1.0; }

double nosal_ng_upper(int n) { return std::sqrt(2.0) * (n - 1.0); }

double ng_radius_degree_spread(int n, int max_degree, int min_degree) {
    return n + 1.0 + (max_degree - min_degree);
}

double ng_pair_upper(int sigma) { return sigma == 0 ? -1.0 : 1.0; }

double ng_pair_lower(double degree_deviation) { return -1.0 - 2.0 * std::sqrt(2.0 * degree_deviation); }

} // namespace bound_formulas

struct BoundEvaluator::Cache {
    LoopedGraph gs;
    double tol;
    std::optional<Spectrum> looped;
    std::optional<Spectrum> base;
    std::optional<Spectrum> comp;
    std::optional<Spectrum> line;
    std::optional<Spectrum> base_line;
    std::optional<Spectrum> deleted;
    std::optional<bool> connected;
    std::optional<bool> comp_connected;
    std::optional<DegreeSummary> degrees;
    std::optional<std::string> digest;

    int n() const { return gs.order(); }
    int m() const { return gs.size(); }
    int sigma() const { return gs.sigma(); }

    const Spectrum& looped_spec() {
        if (!looped)
            looped = eig_sym(adjacency(gs));
        return *looped;
    }
    const Spectrum& base_spec() {
        if (!base)
            base = eig_sym(adjacency(gs.base()));
        return *base;
    }
    const Spectrum& comp_spec() {
        if (!comp)
            comp = eig_sym(adjacency(complement(gs)));
        return *comp;
    }
    const Spectrum& line_spec() {
        if (!line)
            line = eig_sym(adjacency(line_graph(gs).graph));
        return *line;
    }
    const Spectrum& base_line_spec() {
        if (!base_line)
            base_line = eig_sym(adjacency(line_graph(make_looped(gs.base())).graph));
        return *base_line;
    }
    const Spectrum& deleted_spec() {
        if (!deleted)
            deleted = eig_sym(adjacency(delete_vertices(gs.base(), gs.loops())));
        return *deleted;
    }
    bool is_conn() {
        if (!connected)
            connected = n() >= 1 && is_connected(gs.base());
        return *connected;
    }
    bool comp_conn() {
        if (!comp_connected)
            comp_connected = n() >= 1 && is_connected(gs.base().complement());
        return *comp_connected;
    }
    const DegreeSummary& deg() {
        if (!degrees)
            degrees = summarize(gs);
        return *degrees;
    }
    const std::string& instance_digest() {
        if (!digest)
            digest = io::instance_digest(gs);
        return *digest;
    }

    Rational center() const { return Rational(sigma(), n()); }
    double energy_looped() { return energy_about(looped_spec(), center()); }
    double energy_comp() { return energy_about(comp_spec(), center()); }
};

namespace {

using Cache = BoundEvaluator::Cache;

BoundSide side(std::string label, double lhs, double rhs) {
    return {std::move(label), lhs, rhs, rhs - lhs};
}

void hyp(BoundReport& r, std::string name, bool ok) { r.hypotheses.push_back({std::move(name), ok}); }

// Each evaluator records hypotheses, then (if allowed) the sides.
using Evaluate = void (*)(Cache&, BoundReport&, bool gated);

bool proceed(const BoundReport& r, bool gated) { return !gated || r.hypotheses_met(); }

void eval_b1(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 1", c.n() >= 1);
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("lambda1 <= stanley", c.looped_spec().largest(),
                           bound_formulas::stanley_radius_upper(c.m())));
}

void eval_b2(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 1", c.n() >= 1);
    hyp(r, "G connected", c.n() >= 1 && c.is_conn());
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("(2m+sigma)/n <= lambda1", bound_formulas::radius_degree_lower(c.n(), c.m(), c.sigma()),
                           c.looped_spec().largest()));
    const auto cls = classify_bidegreed(c.gs);
    r.structural_equality = cls.bidegreed && cls.s_aligned;
}

void eval_b3(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    hyp(r, "m >= 1", c.m() >= 1);
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("lambda1 <= moment bound", c.looped_spec().largest(),
                           bound_formulas::radius_moment_upper(c.n(), c.m(), c.sigma())));
}

void eval_b4(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 1", c.n() >= 1);
    hyp(r, "G connected", c.n() >= 1 && c.is_conn());
    if (!proceed(r, gated))
        return;
    const auto z = zagreb(c.gs);
    r.sides.push_back(side("zagreb bound <= lambda1",
                           bound_formulas::radius_zagreb_lower(c.n(), z.m1_base, c.sigma(), c.deg().min_degree),
                           c.looped_spec().largest()));
}

void eval_b5(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    hyp(r, "m >= 1", c.m() >= 1);
    hyp(r, "G connected", c.n() >= 1 && c.is_conn());
    hyp(r, "complement connected", c.n() >= 1 && c.comp_conn());
    if (!proceed(r, gated))
        return;
    const double sum = c.looped_spec().largest() + c.comp_spec().largest();
    r.sides.push_back(side("lower <= lambda1 + lambda1bar", bound_formulas::ng_radius_lower(c.n(), c.sigma()), sum));
    r.sides.push_back(side("lambda1 + lambda1bar <= upper", sum, bound_formulas::ng_radius_upper(c.n(), c.sigma())));
}

void eval_b6(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 1", c.n() >= 1);
    if (!proceed(r, gated))
        return;
    const double sum = c.looped_spec().largest() + c.comp_spec().largest();
    r.sides.push_back(side("lambda1 + lambda1bar <= n+1+Delta-delta", sum,
                           bound_formulas::ng_radius_degree_spread(c.n(), c.deg().max_degree, c.deg().min_degree)));
}

void eval_b7(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("2 lambda1 - 2sigma/n <= E",
                           2.0 * c.looped_spec().largest() - 2.0 * c.sigma() / static_cast<double>(c.n()),
                           c.energy_looped()));
}

void eval_b8(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    hyp(r, "G connected", c.n() >= 1 && c.is_conn());
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("4m/n <= E", 4.0 * c.m() / c.n(), c.energy_looped()));
}

bool noclique_conditions(Cache& c) {
    return c.n() >= 4 && c.sigma() >= 1 && 2 * c.sigma() <= c.n() && !is_clique(c.gs.base(), c.gs.loops());
}

void eval_b9(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 4", c.n() >= 4);
    hyp(r, "1 <= sigma <= n/2", c.sigma() >= 1 && 2 * c.sigma() <= c.n());
    hyp(r, "S not a clique", !is_clique(c.gs.base(), c.gs.loops()));
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("2 lambda1 <= E", 2.0 * c.looped_spec().largest(), c.energy_looped()));
}

void eval_b10(Cache& c, BoundReport& r, bool gated) {
    const bool regular_cm = detect_regular_complete_multipartite(c.gs.base()).has_value();
    const bool cm = regular_cm || detect_complete_multipartite(c.gs.base()).has_value();
    hyp(r, "regular complete multipartite, or complete multipartite with n >= 4, 1 <= sigma <= n/2, S not a clique",
        regular_cm || (cm && noclique_conditions(c)));
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("E(G) <= E(G_S)", energy_about(c.base_spec(), 0), c.energy_looped()));
}

void eval_b11(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    hyp(r, "S independent", is_independent_set(c.gs.base(), c.gs.loops()));
    hyp(r, "1 <= sigma <= n-1", c.sigma() >= 1 && c.sigma() <= c.n() - 1);
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("E(G-S) < E(G_S)", energy_about(c.deleted_spec(), 0), c.energy_looped()));
}

void eval_b12(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    hyp(r, "Q a clique", is_clique(c.gs.base(), c.gs.loops()));
    hyp(r, "1 <= sigma <= n-1", c.sigma() >= 1 && c.sigma() <= c.n() - 1);
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("E(G-Q) < E(G_Q)", energy_about(c.deleted_spec(), 0), c.energy_looped()));
}

void eval_b13(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    hyp(r, "S non-empty", c.sigma() >= 1);
    hyp(r, "m >= 1", c.m() >= 1);
    if (!proceed(r, gated))
        return;
    const double plain = energy_about(c.base_line_spec(), 0);
    const double looped = energy_about(c.line_spec(), Rational(c.sigma(), c.m() + c.sigma()));
    r.sides.push_back(side("E(L(G)) < E(L(G_S))", plain, looped));
}

void eval_b14(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "m + sigma >= 1", c.m() + c.sigma() >= 1);
    if (!proceed(r, gated))
        return;
    r.sides.push_back(side("-2 <= lambda_min(L(G_S))", -2.0, c.line_spec().smallest()));
}

// λ_j(G_S) + λ_{n−j+2}(complement) for j = 2..n, 1-based.
std::vector<double> ng_pair_sums(Cache& c) {
    const auto& a = c.looped_spec().values;
    const auto& b = c.comp_spec().values;
    const int n = c.n();
    std::vector<double> sums;
    for (int j = 2; j <= n; ++j)
        sums.push_back(a[static_cast<std::size_t>(j - 1)] + b[static_cast<std::size_t>(n - j + 1)]);
    return sums;
}

void eval_b15(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    if (!proceed(r, gated))
        return;
    const auto sums = ng_pair_sums(c);
    r.sides.push_back(
        side("max_j pair sum <= bound", *std::max_element(sums.begin(), sums.end()), bound_formulas::ng_pair_upper(c.sigma())));
}

void eval_b16(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    if (!proceed(r, gated))
        return;
    const auto sums = ng_pair_sums(c);
    const double s = to_double(degree_deviation(c.gs.base()));
    r.sides.push_back(
        side("bound <= min_j pair sum", bound_formulas::ng_pair_lower(s), *std::min_element(sums.begin(), sums.end())));
}

void eval_b17(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 2", c.n() >= 2);
    hyp(r, "m >= 1", c.m() >= 1);
    if (!proceed(r, gated))
        return;
    const auto forms = ng_energy_closed_forms(c.n(), c.sigma());
    const double total = c.energy_looped() + c.energy_comp();
    r.sides.push_back(side("L <= E + Ebar", forms.lower, total));
    r.sides.push_back(side("E + Ebar <= U", total, forms.upper));
}

void eval_b18(Cache& c, BoundReport& r, bool gated) {
    hyp(r, "n >= 1", c.n() >= 1);
    if (!proceed(r, gated))
        return;
    const auto& g = c.base_spec().values;
    const auto& gs = c.looped_spec().values;
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (gs[i] - g[i] < gs[lo] - g[lo])
            lo = i;
        if (g[i] + 1.0 - gs[i] < g[hi] + 1.0 - gs[hi])
            hi = i;
    }
    r.sides.push_back(side("lambda_i(G) <= lambda_i(G_S)", g[lo], gs[lo]));
    r.sides.push_back(side("lambda_i(G_S) <= lambda_i(G) + 1", gs[hi], g[hi] + 1.0));
}

Evaluate evaluator_for(std::string_view id) {
    static const std::pair<std::string_view, Evaluate> table[] = {
        {"B1", eval_b1},   {"B2", eval_b2},   {"B3", eval_b3},   {"B4", eval_b4},   {"B5", eval_b5},
        {"B6", eval_b6},   {"B7", eval_b7},   {"B8", eval_b8},   {"B9", eval_b9},   {"B10", eval_b10},
        {"B11", eval_b11}, {"B12", eval_b12}, {"B13", eval_b13}, {"B14", eval_b14}, {"B15", eval_b15},
        {"B16", eval_b16}, {"B17", eval_b17}, {"B18", eval_b18},
    };
    for (const auto& [key, fn] : table)
        if (key == id)
            return fn;
    throw DomainError("unknown bound id '" + std::string(id) + "'");
}

void assign_verdict(BoundReport& r, double tol) {
    if (r.sides.empty()) {
        r.verdict = Verdict::Skipped;
        return;
    }
    const auto worst = std::min_element(r.sides.begin(), r.sides.end(),
                                        [](const BoundSide& a, const BoundSide& b) { return a.slack < b.slack; });
    r.lhs = worst->lhs;
    r.rhs = worst->rhs;
    r.slack = worst->slack;
    if (r.slack < -tol)
        r.verdict = Verdict::Violated;
    else if (r.slack <= tol)
        r.verdict = Verdict::Equality;
    else
        r.verdict = Verdict::Holds;
    r.near_tie = r.kind == BoundKind::Strict && r.verdict == Verdict::Equality;
}

BoundReport run(Cache& c, std::string_view id, bool gated) {
    const auto& spec = find_bound(id);
    BoundReport r;
    r.id = spec.id;
    r.kind = spec.kind;
    r.instance = c.instance_digest();
    evaluator_for(spec.id)(c, r, gated);
    assign_verdict(r, c.tol);
    if (!gated && !r.hypotheses_met())
        r.hypothesis_waived = true;
    return r;
}

} // namespace

BoundEvaluator::BoundEvaluator(LoopedGraph gs, double tol) : cache_(std::make_unique<Cache>()) {
    cache_->gs = std::move(gs);
    cache_->tol = tol;
}

BoundEvaluator::~BoundEvaluator() = default;
BoundEvaluator::BoundEvaluator(BoundEvaluator&&) noexcept = default;
BoundEvaluator& BoundEvaluator::operator=(BoundEvaluator&&) noexcept = default;

const LoopedGraph& BoundEvaluator::instance() const { return cache_->gs; }
double BoundEvaluator::tolerance() const { return cache_->tol; }

BoundReport BoundEvaluator::evaluate(std::string_view id) { return run(*cache_, id, true); }
BoundReport BoundEvaluator::evaluate_ungated(std::string_view id) { return run(*cache_, id, false); }

const Spectrum& BoundEvaluator::looped_spectrum() { return cache_->looped_spec(); }
const Spectrum& BoundEvaluator::base_spectrum() { return cache_->base_spec(); }
const Spectrum& BoundEvaluator::complement_spectrum() { return cache_->comp_spec(); }
const Spectrum& BoundEvaluator::line_spectrum() { return cache_->line_spec(); }
const Spectrum& BoundEvaluator::base_line_spectrum() { return cache_->base_line_spec(); }

BoundReport evaluate_bound(std::string_view id, const LoopedGraph& gs, double tol) {
    return BoundEvaluator(gs, tol).evaluate(id);
}

std::vector<BoundReport> evaluate_all(const LoopedGraph& gs, double tol) {
    BoundEvaluator ev(gs, tol);
    std::vector<BoundReport> out;
    for (const auto& spec : bound_catalog())
        out.push_back(ev.evaluate(spec.id));
    return out;
}

std::vector<BoundReport> evaluate_selected(const LoopedGraph& gs, std::span<const std::string> ids, double tol) {
    BoundEvaluator ev(gs, tol);
    std::vector<BoundReport> out;
    for (const auto& spec : bound_catalog())
        if (std::find(ids.begin(), ids.end(), spec.id) != ids.end())
            out.push_back(ev.evaluate(spec.id));
    for (const auto& id : ids)
        find_bound(id);
    return out;
}

BoundReport certify_equality_family(std::string_view id, std::string_view family_name, const FamilyParams& params,
                                    double tol) {
    const auto& spec = find_bound(id);
    std::string fam(family_name);
    std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char ch) { return std::tolower(ch); });
    bool valid = false;
    if (spec.id == "B7")
        valid = fam == "kn_sigma";
    else if (spec.id == "B2")
        valid = fam == "k32_s";
    else if (spec.id == "B4")
        valid = fam == "kn_hat" || fam == "k32_s" || fam == "edgeless_full_loop";
    if (!valid)
        throw DomainError("family '" + fam + "' is not an equality case of " + spec.id);
    BoundEvaluator ev(family(fam, params), tol);
    return ev.evaluate_ungated(spec.id);
}

} // namespace selfloop
