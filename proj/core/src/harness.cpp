#include "selfloop/harness.hpp"

#include "selfloop/construct.hpp"
#include "selfloop/errors.hpp"
#include "selfloop/invariants.hpp"
#include "selfloop/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

namespace selfloop::harness {

namespace {

using Rng = std::mt19937_64;

Rng make_rng(std::initializer_list<std::uint64_t> words) {
    std::vector<std::uint32_t> seeds;
    for (auto w : words) {
        seeds.push_back(static_cast<std::uint32_t>(w & 0xffffffffu));
        seeds.push_back(static_cast<std::uint32_t>(w >> 32));
    }
    std::seed_seq seq(seeds.begin(), seeds.end());
    return Rng(seq);
}

// Draws are written out by hand rather than through <random> distributions,
// whose output is implementation-defined.
std::uint64_t draw_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

double draw_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool draw_bernoulli(Rng& rng, double p) { return draw_unit(rng) < p; }

std::vector<int> draw_subset(Rng& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) + draw_below(rng, static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

LoopSet draw_loops(Rng& rng, int n, const SigmaPolicy& policy) {
    switch (policy.mode) {
    case SigmaPolicy::Mode::Uniform: {
        const int sigma = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n) + 1));
        return LoopSet(draw_subset(rng, n, sigma));
    }
    case SigmaPolicy::Mode::Bernoulli: {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (draw_bernoulli(rng, policy.q))
                members.push_back(v);
        return LoopSet(std::move(members));
    }
    case SigmaPolicy::Mode::Fixed:
        return LoopSet(draw_subset(rng, n, std::min(policy.fixed, n)));
    case SigmaPolicy::Mode::Full:
        return LoopSet::all(n);
    }
    return {};
}

// Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<Edge> pair_order(int n) {
    std::vector<Edge> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.push_back({i, j});
    return pairs;
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
    const auto pairs = pair_order(n);
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1u)
            edges.push_back(pairs[b]);
    return SimpleGraph(n, std::move(edges));
}

void check_exhaustive_order(int n) {
    if (n < 1 || n > kMaxExhaustiveOrder)
        throw DomainError("exhaustive enumeration supports orders 1.." + std::to_string(kMaxExhaustiveOrder) +
                          ", got " + std::to_string(n));
}

constexpr int kFullLoopOrder = 5;

class Fnv1a {
  public:
    void add(std::string_view text) {
        for (unsigned char ch : text) {
            hash_ ^= ch;
            hash_ *= 0x100000001b3ULL;
        }
    }
    std::string hex() const {
        std::ostringstream out;
        out << std::hex;
        out.width(16);
        out.fill('0');
        out << hash_;
        return out.str();
    }

  private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

struct Outcome {
    std::string line;
    std::vector<BoundReport> reports;
    double line_min = 0.0;
    bool has_line = false;
    std::exception_ptr error;
};

std::string describe(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

} // namespace

SigmaPolicy parse_sigma_policy(const std::string& text) {
    if (text == "uniform")
        return SigmaPolicy::uniform();
    if (text == "full")
        return SigmaPolicy::full();
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    if (colon != std::string::npos && (head == "bernoulli" || head == "fixed")) {
        const auto tail = text.substr(colon + 1);
        try {
            std::size_t used = 0;
            if (head == "bernoulli") {
                const double q = std::stod(tail, &used);
                if (used == tail.size() && q >= 0.0 && q <= 1.0)
                    return SigmaPolicy::bernoulli(q);
            } else {
                const int k = std::stoi(tail, &used);
                if (used == tail.size() && k >= 0)
                    return SigmaPolicy::fixed_count(k);
            }
        } catch (const std::logic_error&) {
        }
    }
    throw DomainError("sigma policy must be uniform, full, bernoulli:Q (0<=Q<=1) or fixed:K (K>=0), got '" + text +
                      "'");
}

std::string to_string(const SigmaPolicy& policy) {
    switch (policy.mode) {
    case SigmaPolicy::Mode::Uniform:
        return "uniform";
    case SigmaPolicy::Mode::Bernoulli: {
        std::ostringstream out;
        out << "bernoulli:" << policy.q;
        return out.str();
    }
    case SigmaPolicy::Mode::Fixed:
        return "fixed:" + std::to_string(policy.fixed);
    case SigmaPolicy::Mode::Full:
        return "full";
    }
    return "?";
}

void validate(const CampaignConfig& config) {
    if (config.exhaustive > 0) {
        check_exhaustive_order(config.exhaustive);
        if (config.loop_sample < 1)
            throw DomainError("loop sample must be at least 1");
    } else {
        if (config.n_min < 1 || config.n_max < config.n_min)
            throw DomainError("random campaigns need 1 <= n_min <= n_max");
        if (config.n_max > io::kMaxGraph6Order)
            throw DomainError("random campaigns are limited to order " + std::to_string(io::kMaxGraph6Order));
        if (config.edge_probs.empty())
            throw DomainError("at least one edge probability is required");
        for (double p : config.edge_probs)
            if (!(p >= 0.0 && p <= 1.0))
                throw DomainError("edge probabilities must lie in [0, 1]");
    }
    if (config.threads < 1)
        throw DomainError("thread count must be at least 1");
    if (!(config.tol >= 0.0))
        throw DomainError("tolerance must be non-negative");
    for (const auto& id : config.bounds)
        find_bound(id);
}

LoopedGraph random_instance(const CampaignConfig& config, std::uint64_t index) {
    auto rng = make_rng({config.seed, index});
    const int span = config.n_max - config.n_min + 1;
    const int n = config.n_min + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(span)));
    const double p = config.edge_probs[draw_below(rng, config.edge_probs.size())];
    std::vector<Edge> edges;
    for (const auto& e : pair_order(n))
        if (draw_bernoulli(rng, p))
            edges.push_back(e);
    auto loops = draw_loops(rng, n, config.sigma);
    return make_looped(SimpleGraph(n, std::move(edges)), std::move(loops));
}

std::vector<LoopedGraph> gen_random(const CampaignConfig& config) {
    validate(config);
    std::vector<LoopedGraph> out;
    out.reserve(config.count);
    for (std::uint64_t i = 0; i < config.count; ++i)
        out.push_back(random_instance(config, i));
    return out;
}

std::uint64_t exhaustive_count(int n, int loop_sample) {
    check_exhaustive_order(n);
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    if (n <= kFullLoopOrder)
        return graphs << n;
    return graphs * static_cast<std::uint64_t>(loop_sample);
}

LoopedGraph exhaustive_instance(int n, std::uint64_t index, int loop_sample, std::uint64_t seed) {
    if (index >= exhaustive_count(n, loop_sample))
        throw DomainError("exhaustive index out of range");
    if (n <= kFullLoopOrder) {
        const std::uint64_t loop_mask = index & ((std::uint64_t{1} << n) - 1);
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((loop_mask >> v) & 1u)
                members.push_back(v);
        return make_looped(graph_from_mask(n, index >> n), LoopSet(std::move(members)));
    }
    const std::uint64_t mask = index / static_cast<std::uint64_t>(loop_sample);
    const std::uint64_t draw = index % static_cast<std::uint64_t>(loop_sample);
    auto rng = make_rng({seed, static_cast<std::uint64_t>(n), mask, draw});
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (rng() & 1u)
            members.push_back(v);
    return make_looped(graph_from_mask(n, mask), LoopSet(std::move(members)));
}

void for_each_exhaustive(int n, const std::function<void(const LoopedGraph&)>& visit, int loop_sample,
                         std::uint64_t seed) {
    const auto total = exhaustive_count(n, loop_sample);
    for (std::uint64_t i = 0; i < total; ++i)
        visit(exhaustive_instance(n, i, loop_sample, seed));
}

std::vector<LoopedGraph> gen_exhaustive(int n, int loop_sample, std::uint64_t seed) {
    std::vector<LoopedGraph> out;
    out.reserve(exhaustive_count(n, loop_sample));
    for_each_exhaustive(n, [&out](const LoopedGraph& gs) { out.push_back(gs); }, loop_sample, seed);
    return out;
}

std::uint64_t CampaignReport::violations() const {
    std::uint64_t total = 0;
    for (const auto& t : tallies)
        total += t.violated;
    return total;
}

std::uint64_t CampaignReport::near_ties() const {
    std::uint64_t total = 0;
    for (const auto& t : tallies)
        total += t.near_tie;
    return total;
}

const BoundTally* CampaignReport::tally(const std::string& id) const {
    for (const auto& t : tallies)
        if (t.id == id)
            return &t;
    return nullptr;
}

HardGateViolation::HardGateViolation(std::string gate, std::string witness, const std::string& detail)
    : std::runtime_error("hard gate " + gate + " failed on [" + witness + "]: " + detail), gate_(std::move(gate)),
      witness_(std::move(witness)) {}

void check_hard_gates(BoundEvaluator& evaluator) {
    const auto& gs = evaluator.instance();
    const auto witness = io::instance_digest(gs);
    const int n = gs.order();
    const double gate_tol = 1e-9 * std::max(1, n);

    const auto& looped = evaluator.looped_spectrum();
    const auto trace = trace_identities(gs, looped);
    if (!trace.holds)
        throw HardGateViolation("trace", witness,
                                "sum " + describe(trace.sum) + " vs " + std::to_string(trace.expected_sum) +
                                    ", sum of squares " + describe(trace.sum_of_squares) + " vs " +
                                    std::to_string(trace.expected_sum_of_squares));

    const auto shift = check_shift_interlacing(evaluator.base_spectrum(), looped, gs.sigma(), gate_tol);
    if (!shift.lower_holds || !shift.upper_holds || !shift.equality_chains_hold)
        throw HardGateViolation("B18", witness,
                                "lower excess " + describe(shift.lower_excess) + ", upper excess " +
                                    describe(shift.upper_excess));

    if (gs.size() + gs.sigma() >= 1) {
        const double low = evaluator.line_spectrum().smallest();
        if (low < -2.0 - gate_tol)
            throw HardGateViolation("B14", witness, "line graph eigenvalue " + describe(low));
        const auto b14 = evaluator.evaluate("B14");
        if (b14.verdict == Verdict::Violated)
            throw HardGateViolation("B14", witness, "slack " + describe(b14.slack));

        const auto b = incidence(gs);
        auto expected_columns = adjacency(line_graph(gs).graph);
        for (int e = 0; e < gs.size(); ++e)
            expected_columns.set(e, e, expected_columns.numerator(e, e) + 2);
        if (!(b.gram_columns() == expected_columns))
            throw HardGateViolation("incidence", witness, "B^T B differs from A(L(G_S)) + 2 I_m");
    }
    if (!(incidence(gs).gram_rows() == signless_laplacian(gs)))
        throw HardGateViolation("incidence", witness, "B B^T differs from Q(G_S)");
}

CampaignReport run_campaign(const CampaignConfig& config) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();

    std::vector<std::string> ids;
    for (const auto& spec : bound_catalog())
        if (config.bounds.empty() || std::find(config.bounds.begin(), config.bounds.end(), spec.id) !=
                                         config.bounds.end())
            ids.push_back(spec.id);

    CampaignReport report;
    report.config = config;
    for (const auto& id : ids) {
        BoundTally tally;
        tally.id = id;
        report.tallies.push_back(std::move(tally));
    }

    // The corpus as a flat index space: either the random stream or the
    // concatenated exhaustive orders.
    std::vector<std::pair<int, std::uint64_t>> segments;
    std::uint64_t total = 0;
    if (config.exhaustive > 0) {
        for (int n = 1; n <= config.exhaustive; ++n) {
            segments.emplace_back(n, total);
            total += exhaustive_count(n, config.loop_sample);
        }
    } else {
        total = config.count;
    }
    const auto instance_at = [&](std::uint64_t index) {
        if (config.exhaustive == 0)
            return random_instance(config, index);
        auto it = std::upper_bound(segments.begin(), segments.end(), index,
                                   [](std::uint64_t i, const auto& seg) { return i < seg.second; });
        --it;
        return exhaustive_instance(it->first, index - it->second, config.loop_sample, config.seed);
    };

    const auto evaluate = [&](std::uint64_t index, Outcome& out) {
        try {
            BoundEvaluator ev(instance_at(index), config.tol);
            out.line = io::instance_digest(ev.instance());
            check_hard_gates(ev);
            if (ev.instance().size() + ev.instance().sigma() >= 1) {
                out.has_line = true;
                out.line_min = ev.line_spectrum().smallest();
            }
            out.reports.reserve(ids.size());
            for (const auto& id : ids)
                out.reports.push_back(ev.evaluate(id));
        } catch (...) {
            out.error = std::current_exception();
        }
    };

    Fnv1a hash;
    const auto merge = [&](Outcome& out) {
        if (out.error)
            std::rethrow_exception(out.error);
        hash.add(out.line);
        hash.add("\n");
        ++report.instances;
        if (out.has_line && (!report.line_min_eigenvalue || out.line_min < *report.line_min_eigenvalue)) {
            report.line_min_eigenvalue = out.line_min;
            report.line_min_witness = out.line;
        }
        if (out.has_line && report.line_min_minus_two_witness.empty() && std::abs(out.line_min + 2.0) <= config.tol)
            report.line_min_minus_two_witness = out.line;
        for (std::size_t b = 0; b < out.reports.size(); ++b) {
            const auto& r = out.reports[b];
            auto& t = report.tallies[b];
            switch (r.verdict) {
            case Verdict::Holds:
                ++t.holds;
                break;
            case Verdict::Equality:
                ++t.equality;
                if (t.first_equality_witness.empty())
                    t.first_equality_witness = out.line;
                break;
            case Verdict::Violated:
                ++t.violated;
                if (t.first_violation_witness.empty())
                    t.first_violation_witness = out.line;
                break;
            case Verdict::Skipped:
                ++t.skipped;
                break;
            }
            if (r.near_tie) {
                ++t.near_tie;
                if (t.first_near_tie_witness.empty())
                    t.first_near_tie_witness = out.line;
            }
            if (r.verdict != Verdict::Skipped && (!t.min_slack || r.slack < *t.min_slack)) {
                t.min_slack = r.slack;
                t.min_slack_witness = out.line;
            }
            if (r.id == "B15" && r.verdict == Verdict::Equality) {
                const bool unlooped = r.rhs < 0.0;
                auto& slot = unlooped ? report.pair_upper_attained.unlooped : report.pair_upper_attained.looped;
                if (slot.empty())
                    slot = out.line;
            }
        }
    };

    constexpr std::uint64_t kChunk = 2048;
    const auto workers = static_cast<std::uint64_t>(config.threads);
    std::vector<Outcome> chunk;
    for (std::uint64_t begin = 0; begin < total; begin += kChunk) {
        const std::uint64_t size = std::min(kChunk, total - begin);
        chunk.assign(size, Outcome{});
        if (workers == 1) {
            for (std::uint64_t i = 0; i < size; ++i)
                evaluate(begin + i, chunk[i]);
        } else {
            std::vector<std::thread> pool;
            for (std::uint64_t w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::uint64_t i = w; i < size; i += workers)
                        evaluate(begin + i, chunk[i]);
                });
            for (auto& th : pool)
                th.join();
        }
        for (auto& out : chunk)
            merge(out);
    }

    report.corpus_hash = hash.hex();
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

OracleReport oracle_ng_aux(int n_max, double tol) {
    if (n_max < 2)
        throw DomainError("the auxiliary-matrix oracle needs n_max >= 2");
    OracleReport report;
    for (int n = 2; n <= n_max; ++n)
        for (int sigma = 0; sigma <= n; ++sigma) {
            ++report.cases;
            const auto computed = eig_sym(ng_energy_aux_matrix(n, sigma));
            const auto closed = ng_aux_closed_form_spectrum(n, sigma);
            const double gap = multiset_distance(computed.values, closed);
            report.worst_spectrum_gap = std::max(report.worst_spectrum_gap, gap);

            double abs_sum = 0.0;
            for (double x : computed.values)
                abs_sum += std::abs(x);
            const double energy_gap = std::abs(abs_sum - ng_energy_closed_forms(n, sigma).lower);
            report.worst_energy_gap = std::max(report.worst_energy_gap, energy_gap);

            const bool simplified = ng_energy_lower_exact(n, sigma) == ng_energy_lower_simplified_exact(n, sigma);
            if (!simplified)
                ++report.simplification_mismatches;

            if (gap > tol || energy_gap > tol || !simplified) {
                std::ostringstream msg;
                msg << "n=" << n << " sigma=" << sigma << ": spectrum gap " << gap << ", energy gap " << energy_gap
                    << (simplified ? "" : ", simplified lower bound differs");
                report.failures.push_back(msg.str());
                report.passed = false;
            }
        }
    return report;
}

OracleReport oracle_kn_sigma(int n_max, double tol) {
    if (n_max < 1)
        throw DomainError("the complete-graph oracle needs n_max >= 1");
    OracleReport report;
    for (int n = 1; n <= n_max; ++n)
        for (int sigma = 0; sigma <= n; ++sigma) {
            ++report.cases;
            FamilyParams params;
            params.n = n;
            params.sigma = sigma;
            const auto gs = family("kn_sigma", params);
            const auto computed = eig_sym(adjacency(gs));
            const double gap = multiset_distance(computed.values, closed_form_kn_sigma_spectrum(n, sigma));
            report.worst_spectrum_gap = std::max(report.worst_spectrum_gap, gap);
            if (gap > tol) {
                report.failures.push_back("n=" + std::to_string(n) + " sigma=" + std::to_string(sigma) +
                                          ": spectrum gap " + describe(gap));
                report.passed = false;
            }
        }
    return report;
}

} // namespace selfloop::harness
