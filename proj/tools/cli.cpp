#include "cli.hpp"

#include "report_json.hpp"

#include "selfloop/charpoly.hpp"
#include "selfloop/construct.hpp"
#include "selfloop/errors.hpp"
#include "selfloop/families.hpp"
#include "selfloop/harness.hpp"
#include "selfloop/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

namespace selfloop::cli {

namespace {

struct LineInput {
    std::string path = "-";
    int jobs = 1;
};

/// Produces the output line for one instance and returns its exit status.
using Handler = std::function<int(const LoopedGraph&, std::string&)>;

struct LineResult {
    int number = 0;
    std::string line;
    std::string text;
    int status = kExitOk;
    std::string parse_error;
    std::exception_ptr error;
};

void process(LineResult& r, const Handler& handle) {
    try {
        const auto gs = io::parse_loopline(r.line);
        r.status = handle(gs, r.text);
    } catch (const ParseError& e) {
        r.parse_error = e.what();
    } catch (...) {
        r.error = std::current_exception();
    }
}

/// Runs `handle` on every non-blank, non-comment line, `jobs` lines at a time
/// in parallel, and writes the results in input order. Parse failures are
/// reported with their line number.
int for_each_instance(const LineInput& input, std::istream& in, std::ostream& out, std::ostream& err,
                      const Handler& handle) {
    std::ifstream file;
    std::istream* source = &in;
    if (input.path != "-") {
        file.open(input.path);
        if (!file) {
            err << "error: cannot open '" << input.path << "'\n";
            return kExitParse;
        }
        source = &file;
    }
    const auto jobs = static_cast<std::size_t>(input.jobs);
    const std::size_t batch_size = jobs == 1 ? 1 : 64 * jobs;
    int status = kExitOk;
    std::vector<LineResult> batch;
    std::string line;
    int number = 0;
    bool more = true;
    while (more) {
        batch.clear();
        while (batch.size() < batch_size && (more = static_cast<bool>(std::getline(*source, line)))) {
            ++number;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            auto& r = batch.emplace_back();
            r.number = number;
            r.line = line;
        }
        if (jobs == 1 || batch.size() <= 1) {
            for (auto& r : batch)
                process(r, handle);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < jobs; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < batch.size(); i += jobs)
                        process(batch[i], handle);
                });
            for (auto& t : pool)
                t.join();
        }
        for (auto& r : batch) {
            if (!r.parse_error.empty()) {
                err << "error: line " << r.number << ": " << r.parse_error << "\n";
                return kExitParse;
            }
            if (r.error)
                std::rethrow_exception(r.error);
            out << r.text << "\n";
            status = std::max(status, r.status);
        }
    }
    return status;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> ids;
    for (const auto& item : raw) {
        std::string id = item;
        std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::toupper(c); });
        find_bound(id);
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            ids.push_back(id);
    }
    return ids;
}

void add_input(CLI::App* cmd, LineInput& input) {
    cmd->add_option("-i,--input", input.path, "File of loop lines ('-' for stdin)")->capture_default_str();
    cmd->add_option("-j,--jobs", input.jobs, "Lines processed in parallel; output keeps input order")
        ->capture_default_str()
        ->check(CLI::Range(1, 256));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral toolkit for graphs with self-loops"};
    app.require_subcommand(1);

    LineInput input;

    auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum of each loop line");
    add_input(spectrum, input);
    auto* energy = app.add_subcommand("energy", "Energy about sigma/n of each loop line");
    add_input(energy, input);
    auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of each loop line");
    add_input(charpoly, input);

    auto* linegraph = app.add_subcommand("linegraph", "Line graph of each loop line, as a loop line");
    add_input(linegraph, input);

    bool alt_complement = false;
    auto* complement_cmd = app.add_subcommand("complement", "Complement of each loop line (same loop set)");
    add_input(complement_cmd, input);
    complement_cmd->add_flag("--alt-complement", alt_complement, "Put loops on the vertices outside S instead");

    std::vector<std::string> only;
    double tol = kDefaultBoundTolerance;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the bound catalog on each loop line");
    add_input(bounds, input);
    bounds->add_option("--only", only, "Comma-separated bound ids")->delimiter(',');
    bounds->add_option("--tol", tol, "Equality / violation margin")->capture_default_str()->check(
        CLI::NonNegativeNumber);

    auto* identity = app.add_subcommand("identity", "Line-graph characteristic polynomial identity on the base graph");
    add_input(identity, input);

    harness::CampaignConfig fuzz_config;
    std::string sigma_policy = "uniform";
    std::vector<std::string> fuzz_only;
    auto* fuzz = app.add_subcommand("fuzz", "Randomized or exhaustive verification campaign");
    fuzz->add_option("--seed", fuzz_config.seed, "Campaign seed")->capture_default_str();
    fuzz->add_option("--n-min", fuzz_config.n_min, "Smallest order")->capture_default_str();
    fuzz->add_option("--n-max", fuzz_config.n_max, "Largest order")->capture_default_str();
    fuzz->add_option("--count", fuzz_config.count, "Random instances")->capture_default_str();
    fuzz->add_option("--p", fuzz_config.edge_probs, "Edge probabilities")->delimiter(',');
    fuzz->add_option("--sigma-policy", sigma_policy, "uniform | full | bernoulli:Q | fixed:K")
        ->capture_default_str();
    fuzz->add_option("--exhaustive", fuzz_config.exhaustive, "Enumerate every order 1..K instead (K <= 7)");
    fuzz->add_option("--loop-sample", fuzz_config.loop_sample, "Loop sets per graph at orders 6 and 7")
        ->capture_default_str();
    fuzz->add_option("--only", fuzz_only, "Comma-separated bound ids")->delimiter(',');
    fuzz->add_option("--tol", fuzz_config.tol, "Equality / violation margin")->capture_default_str();
    fuzz->add_option("--threads", fuzz_config.threads, "Worker threads")->capture_default_str();
    fuzz->add_flag("--timestamps", fuzz_config.timestamps, "Include the runtime in the report");

    std::string family_name;
    FamilyParams params;
    std::vector<int> parts;
    std::vector<int> loops;
    auto* family_cmd = app.add_subcommand("family", "Emit a named family as a loop line");
    family_cmd->add_option("--name", family_name, "Family id")->required();
    family_cmd->add_option("--n", params.n, "Order");
    family_cmd->add_option("--sigma", params.sigma, "Loop count");
    family_cmd->add_option("--k", params.k, "Number of parts (kkxp)");
    family_cmd->add_option("--p", params.p, "Part size (kkxp)");
    family_cmd->add_option("--parts", parts, "Comma-separated part sizes")->delimiter(',');
    auto* loops_opt = family_cmd->add_option("--loops", loops, "Explicit loop set")->delimiter(',');

    int oracle_n_max = 40;
    int oracle_kn_max = 12;
    auto* oracle = app.add_subcommand("oracle", "Closed-form spectrum and auxiliary-matrix cross-checks");
    oracle->add_option("--n-max", oracle_n_max, "Largest order for the auxiliary matrix")->capture_default_str();
    oracle->add_option("--kn-max", oracle_kn_max, "Largest order for K_n^sigma")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (spectrum->parsed())
            return for_each_instance(input, in, out, err, [&](const LoopedGraph& gs, std::string& text) {
                text = report::spectrum_report(gs, eig_sym(adjacency(gs))).dump();
                return kExitOk;
            });
        if (energy->parsed())
            return for_each_instance(input, in, out, err, [&](const LoopedGraph& gs, std::string& text) {
                text = report::energy_report(gs, selfloop::energy(gs)).dump();
                return kExitOk;
            });
        if (charpoly->parsed())
            return for_each_instance(input, in, out, err, [&](const LoopedGraph& gs, std::string& text) {
                text = report::charpoly_report(gs, charpoly_exact(adjacency(gs))).dump();
                return kExitOk;
            });
        if (linegraph->parsed())
            return for_each_instance(input, in, out, err, [&](const LoopedGraph& gs, std::string& text) {
                text = io::print_loopline(line_graph(gs).graph);
                return kExitOk;
            });
        if (complement_cmd->parsed())
            return for_each_instance(input, in, out, err, [&](const LoopedGraph& gs, std::string& text) {
                const auto conv =
                    alt_complement ? ComplementConvention::SwappedLoops : ComplementConvention::SameLoops;
                text = io::print_loopline(complement(gs, conv));
                return kExitOk;
            });
        if (bounds->parsed()) {
            const auto ids = split_ids(only);
            return for_each_instance(input, in, out, err, [&](const LoopedGraph& gs, std::string& text) {
                const auto reports = ids.empty() ? evaluate_all(gs, tol) : evaluate_selected(gs, ids, tol);
                text = report::bounds_report(gs, reports).dump();
                const bool violated = std::any_of(reports.begin(), reports.end(),
                                                  [](const BoundReport& r) { return r.verdict == Verdict::Violated; });
                return violated ? kExitViolation : kExitOk;
            });
        }
        if (identity->parsed())
            return for_each_instance(input, in, out, err, [&](const LoopedGraph& gs, std::string& text) {
                const auto result = verify_linegraph_identity(gs.base());
                text = report::identity_report(gs, result).dump();
                return result.equal ? kExitOk : kExitViolation;
            });
        if (fuzz->parsed()) {
            fuzz_config.sigma = harness::parse_sigma_policy(sigma_policy);
            fuzz_config.bounds = split_ids(fuzz_only);
            try {
                const auto report = harness::run_campaign(fuzz_config);
                out << report::campaign_json(report).dump(2) << "\n";
                return report.violations() > 0 ? kExitViolation : kExitOk;
            } catch (const harness::HardGateViolation& e) {
                err << "error: " << e.what() << "\nwitness: " << e.witness() << "\n";
                return kExitViolation;
            }
        }
        if (family_cmd->parsed()) {
            if (!parts.empty())
                params.parts = parts;
            if (loops_opt->count() > 0)
                params.loops = loops;
            out << io::print_loopline(family(family_name, params)) << "\n";
            return kExitOk;
        }
        if (oracle->parsed()) {
            const auto aux = harness::oracle_ng_aux(oracle_n_max);
            const auto kn = harness::oracle_kn_sigma(oracle_kn_max);
            report::Json doc{{"schema_version", report::kSchemaVersion},
                             {"command", "oracle"},
                             {"ng_aux", report::oracle_json(aux)},
                             {"kn_sigma", report::oracle_json(kn)},
                             {"passed", aux.passed && kn.passed}};
            out << doc.dump(2) << "\n";
            return aux.passed && kn.passed ? kExitOk : kExitViolation;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

} // namespace selfloop::cli
