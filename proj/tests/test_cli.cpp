#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace selfloop::cli {
namespace {

const std::string kGoldenDir = std::string(SELFLOOP_TEST_DATA_DIR) + "/golden/";

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Set SELFLOOP_UPDATE_GOLDEN=1 to rewrite the files after an intended format change.
void expect_golden(const std::string& name, const Run& r) {
    const auto path = kGoldenDir + name;
    if (std::getenv("SELFLOOP_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path, std::ios::binary) << r.out;
        return;
    }
    const auto expected = read_file(path);
    ASSERT_FALSE(expected.empty()) << "missing golden file " << path;
    EXPECT_EQ(r.out, expected) << "output differs from " << path;
}

std::string instances() { return kGoldenDir + "instances.txt"; }

TEST(CliGolden, FamilyLine) {
    const auto r = run({"family", "--name", "kn_sigma", "--n", "5", "--sigma", "2"});
    EXPECT_EQ(r.code, kExitOk);
    expect_golden("family_kn_sigma.txt", r);
}

TEST(CliGolden, FamilyPipedIntoSpectrum) {
    const auto family = run({"family", "--name", "kn_sigma", "--n", "2", "--sigma", "1"});
    ASSERT_EQ(family.out, "A_ | 0\n");
    const auto r = run({"spectrum"}, family.out);
    EXPECT_EQ(r.code, kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["spectrum"], nlohmann::json::parse(R"(["1.618033988750", "-0.618033988750"])"));
    EXPECT_EQ(doc["schema_version"], 1);
}

TEST(CliGolden, PerLineCommands) {
    for (const char* cmd : {"spectrum", "energy", "charpoly", "bounds"}) {
        const auto r = run({cmd, "-i", instances()});
        EXPECT_EQ(r.code, kExitOk) << cmd << ": " << r.err;
        expect_golden(std::string(cmd) + ".jsonl", r);
    }
    for (const char* cmd : {"linegraph", "complement"}) {
        const auto r = run({cmd, "--input", instances()});
        EXPECT_EQ(r.code, kExitOk) << cmd;
        expect_golden(std::string(cmd) + ".txt", r);
    }
}

TEST(CliGolden, IdentityOnK2) {
    const auto r = run({"identity"}, "A_ | -\n");
    EXPECT_EQ(r.code, kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["verdict"], "equal");
    EXPECT_EQ(doc["lhs"], nlohmann::json::parse(R"(["2", "-1", "-2", "1"])"));
    const auto all = run({"identity", "-i", kGoldenDir + "identity_instances.txt"});
    EXPECT_EQ(all.code, kExitOk);
    expect_golden("identity.jsonl", all);
}

TEST(CliGolden, LineGraphMinimumBoundHolds) {
    const auto r = run({"bounds", "--only", "B14", "-i", instances()});
    EXPECT_EQ(r.code, kExitOk);
    expect_golden("bounds_b14.jsonl", r);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto doc = nlohmann::json::parse(line);
        ASSERT_EQ(doc["bounds"].size(), 1u);
        const auto& verdict = doc["bounds"]["B14"]["verdict"];
        EXPECT_TRUE(verdict == "holds" || verdict == "equality") << verdict;
        ++count;
    }
    EXPECT_EQ(count, 15);
}

TEST(CliGolden, FuzzAndOracleReports) {
    const auto fuzz = run({"fuzz", "--seed", "7", "--n-max", "6", "--count", "200"});
    EXPECT_EQ(fuzz.code, kExitOk);
    expect_golden("fuzz_seed7.json", fuzz);
    const auto exhaustive = run({"fuzz", "--exhaustive", "3"});
    EXPECT_EQ(exhaustive.code, kExitOk);
    expect_golden("fuzz_exhaustive3.json", exhaustive);
    const auto doc = nlohmann::json::parse(exhaustive.out);
    EXPECT_EQ(doc["instances"], 2 + 8 + 64);
    EXPECT_EQ(doc["violations"], 0);
    const auto oracle = run({"oracle", "--n-max", "6", "--kn-max", "4"});
    EXPECT_EQ(oracle.code, kExitOk);
    expect_golden("oracle_small.json", oracle);
}

TEST(CliDeterminism, SameInputSameBytes) {
    const std::vector<std::vector<std::string>> commands{
        {"bounds", "-i", instances()},
        {"energy", "-i", instances()},
        {"fuzz", "--seed", "3", "--n-max", "7", "--count", "300"},
    };
    for (const auto& args : commands)
        EXPECT_EQ(run(args).out, run(args).out) << args[0];
}

TEST(CliDeterminism, ParallelismDoesNotChangeOutput) {
    const auto serial = run({"bounds", "-i", instances()});
    const auto parallel = run({"bounds", "-i", instances(), "--jobs", "4"});
    EXPECT_EQ(serial.out, parallel.out);
    const auto fuzz1 = run({"fuzz", "--seed", "3", "--count", "3000", "--threads", "1"});
    const auto fuzz4 = run({"fuzz", "--seed", "3", "--count", "3000", "--threads", "4"});
    EXPECT_EQ(fuzz1.out, fuzz4.out);
}

TEST(CliDeterminism, TimestampsOnlyBehindFlag) {
    const auto plain = run({"fuzz", "--count", "20"});
    EXPECT_EQ(nlohmann::json::parse(plain.out).count("runtime_seconds"), 0u);
    const auto stamped = run({"fuzz", "--count", "20", "--timestamps"});
    EXPECT_EQ(nlohmann::json::parse(stamped.out).count("runtime_seconds"), 1u);
}

TEST(CliExitCodes, ParseErrors) {
    const auto bad_line = run({"spectrum"}, "A_ | 0\nnot a graph\n");
    EXPECT_EQ(bad_line.code, kExitParse);
    EXPECT_NE(bad_line.err.find("line 2"), std::string::npos);
    // The line before the bad one is still reported.
    EXPECT_EQ(std::count(bad_line.out.begin(), bad_line.out.end(), '\n'), 1);
    EXPECT_EQ(run({"spectrum"}, "A_ | 5\n").code, kExitParse);
    EXPECT_EQ(run({"nonsense"}).code, kExitParse);
    EXPECT_EQ(run({}).code, kExitParse);
    EXPECT_EQ(run({"family"}).code, kExitParse);
    EXPECT_EQ(run({"bounds", "--only", "B42"}, "A_ | 0\n").code, kExitParse);
    EXPECT_EQ(run({"fuzz", "--exhaustive", "9"}).code, kExitParse);
    EXPECT_EQ(run({"fuzz", "--sigma-policy", "sometimes"}).code, kExitParse);
    EXPECT_EQ(run({"spectrum", "-i", "/nonexistent/loops.txt"}).code, kExitParse);
    EXPECT_EQ(run({"family", "--name", "kn_sigma", "--n", "3", "--sigma", "4"}).code, kExitParse);
}

TEST(CliExitCodes, DomainErrorsAreInputErrors) {
    // No edges and no loops: the line graph is empty.
    EXPECT_EQ(run({"linegraph"}, "A? | -\n").code, kExitParse);
    EXPECT_EQ(run({"identity"}, "A? | 0\n").code, kExitParse);
}

TEST(CliExitCodes, SuccessAndHelp) {
    EXPECT_EQ(run({"spectrum"}, "# comment only\n\n").code, kExitOk);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    EXPECT_EQ(run({"bounds", "--only", "b7,B17"}, "A_ | 0\n").code, kExitOk);
}

TEST(CliExitCodes, ViolationsExitOne) {
    // K2 sits exactly on several bounds; with no tolerance, round-off in the
    // last bit decides, and any negative slack is reported as a violation.
    const auto r = run({"bounds", "--tol", "0"}, "A_ | -\n");
    const auto doc = nlohmann::json::parse(r.out);
    int violated = 0;
    for (const auto& [id, report] : doc["bounds"].items())
        violated += report["verdict"] == "violated";
    EXPECT_EQ(r.code, violated > 0 ? kExitViolation : kExitOk);
    EXPECT_EQ(run({"bounds"}, "A_ | -\n").code, kExitOk);
}

} // namespace
} // namespace selfloop::cli
