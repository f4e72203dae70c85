#include "report_json.hpp"

#include "selfloop/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace selfloop::report {

std::string decimal(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (std::abs(value) < 5e-13)
        value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", value);
    return buf;
}

std::string scientific(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", value);
    return buf;
}

Json instance_json(const LoopedGraph& gs) {
    return Json{{"n", gs.order()}, {"m", gs.size()}, {"sigma", gs.sigma()}, {"loopline", io::instance_digest(gs)}};
}

Json spectrum_json(const Spectrum& spectrum) {
    Json out = Json::array();
    for (double x : spectrum.values)
        out.push_back(decimal(x));
    return out;
}

Json poly_json(const IntPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficient_strings())
        out.push_back(c);
    return out;
}

namespace {

Json header(const char* command, const LoopedGraph& gs) {
    return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"instance", instance_json(gs)}};
}

std::string rational_text(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

} // namespace

Json spectrum_report(const LoopedGraph& gs, const Spectrum& spectrum) {
    auto out = header("spectrum", gs);
    out["spectrum"] = spectrum_json(spectrum);
    return out;
}

Json energy_report(const LoopedGraph& gs, const EnergyValue& energy) {
    auto out = header("energy", gs);
    out["energy"] = decimal(energy.value);
    out["center"] = rational_text(energy.center);
    out["spectrum"] = spectrum_json(energy.spectrum);
    return out;
}

Json charpoly_report(const LoopedGraph& gs, const IntPoly& p) {
    auto out = header("charpoly", gs);
    out["charpoly"] = poly_json(p);
    out["charpoly_text"] = p.to_string();
    return out;
}

Json identity_report(const LoopedGraph& gs, const LineGraphIdentity& identity) {
    auto out = header("identity", gs);
    out["verdict"] = identity.equal ? "equal" : "unequal";
    out["lhs"] = poly_json(identity.lhs);
    out["rhs"] = poly_json(identity.rhs);
    out["lhs_text"] = identity.lhs.to_string();
    out["rhs_text"] = identity.rhs.to_string();
    out["line_charpoly"] = poly_json(identity.line_charpoly);
    out["full_loop_line_charpoly"] = poly_json(identity.full_loop_line_charpoly);
    return out;
}

Json bound_json(const BoundReport& r) {
    const auto& spec = find_bound(r.id);
    Json out{{"id", r.id}, {"name", spec.name}, {"kind", std::string(to_string(r.kind))}};
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses)
        hyps.push_back(Json{{"name", h.name}, {"satisfied", h.satisfied}});
    out["hypotheses"] = std::move(hyps);
    out["verdict"] = std::string(to_string(r.verdict));
    if (r.verdict != Verdict::Skipped) {
        out["lhs"] = decimal(r.lhs);
        out["rhs"] = decimal(r.rhs);
        out["slack"] = decimal(r.slack);
        if (r.sides.size() > 1) {
            Json sides = Json::array();
            for (const auto& s : r.sides)
                sides.push_back(Json{{"label", s.label},
                                     {"lhs", decimal(s.lhs)},
                                     {"rhs", decimal(s.rhs)},
                                     {"slack", decimal(s.slack)}});
            out["sides"] = std::move(sides);
        }
    }
    if (r.kind == BoundKind::Strict)
        out["near_tie"] = r.near_tie;
    if (r.structural_equality)
        out["structural_equality"] = *r.structural_equality;
    if (r.hypothesis_waived)
        out["hypothesis_waived"] = true;
    return out;
}

Json bounds_report(const LoopedGraph& gs, const std::vector<BoundReport>& reports) {
    auto out = header("bounds", gs);
    Json bounds = Json::object();
    for (const auto& r : reports)
        bounds[r.id] = bound_json(r);
    out["bounds"] = std::move(bounds);
    return out;
}

Json campaign_json(const harness::CampaignReport& report) {
    const auto& c = report.config;
    Json config{{"seed", c.seed}};
    if (c.exhaustive > 0) {
        config["exhaustive"] = c.exhaustive;
        config["loop_sample"] = c.loop_sample;
    } else {
        config["n_min"] = c.n_min;
        config["n_max"] = c.n_max;
        Json probs = Json::array();
        for (double p : c.edge_probs)
            probs.push_back(decimal(p));
        config["edge_probs"] = std::move(probs);
        config["sigma_policy"] = harness::to_string(c.sigma);
        config["count"] = c.count;
    }
    config["bounds"] = c.bounds;
    config["tol"] = decimal(c.tol);

    Json tallies = Json::object();
    for (const auto& t : report.tallies) {
        Json entry{{"holds", t.holds},
                   {"equality", t.equality},
                   {"skipped", t.skipped},
                   {"violated", t.violated},
                   {"near_tie", t.near_tie}};
        if (t.min_slack) {
            entry["min_slack"] = scientific(*t.min_slack);
            entry["min_slack_witness"] = t.min_slack_witness;
        }
        if (!t.first_equality_witness.empty())
            entry["equality_witness"] = t.first_equality_witness;
        if (!t.first_violation_witness.empty())
            entry["violation_witness"] = t.first_violation_witness;
        if (!t.first_near_tie_witness.empty())
            entry["near_tie_witness"] = t.first_near_tie_witness;
        tallies[t.id] = std::move(entry);
    }

    Json out{{"schema_version", kSchemaVersion},
             {"command", "fuzz"},
             {"config", std::move(config)},
             {"instances", report.instances},
             {"corpus_hash", report.corpus_hash},
             {"violations", report.violations()},
             {"near_ties", report.near_ties()},
             {"tallies", std::move(tallies)}};
    Json line{{"min_eigenvalue", report.line_min_eigenvalue ? decimal(*report.line_min_eigenvalue) : "none"}};
    if (!report.line_min_witness.empty())
        line["witness"] = report.line_min_witness;
    if (!report.line_min_minus_two_witness.empty())
        line["minus_two_witness"] = report.line_min_minus_two_witness;
    out["line_graph"] = std::move(line);
    Json pair = Json::object();
    if (!report.pair_upper_attained.unlooped.empty())
        pair["sigma_zero"] = report.pair_upper_attained.unlooped;
    if (!report.pair_upper_attained.looped.empty())
        pair["sigma_positive"] = report.pair_upper_attained.looped;
    out["pair_upper_attained"] = std::move(pair);
    if (c.timestamps)
        out["runtime_seconds"] = report.runtime_seconds;
    return out;
}

Json oracle_json(const harness::OracleReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back(f);
    return Json{{"passed", report.passed},
                {"cases", report.cases},
                {"worst_spectrum_gap", scientific(report.worst_spectrum_gap)},
                {"worst_energy_gap", scientific(report.worst_energy_gap)},
                {"simplification_mismatches", report.simplification_mismatches},
                {"failures", std::move(failures)}};
}

} // namespace selfloop::report
