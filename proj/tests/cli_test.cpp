#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fairshare/cli.hpp"
#include "json.hpp"

namespace fairshare::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> digit_runs(const std::string& text) {
    static const std::regex number("[0-9]+");
    std::vector<std::string> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
        out.push_back(it->str());
    return out;
}

TEST(Cli, SolveJson) {
    const Outcome o = invoke({"solve", "--divisors", "2,3,9", "--herd", "17", "--format", "json"});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_EQ(o.out,
              R"({"divisors":["2","3","9"],"r":"17","m":"18","herd":"17","feasible":true,)"
              R"("loan":"1","augmented":"18","multiplier":"1","shares":["9","6","2"]})"
              "\n");
    EXPECT_TRUE(o.err.empty());
}

TEST(Cli, SolveInfeasible) {
    const Outcome o = invoke({"solve", "--divisors", "2,3,9", "--herd", "16"});
    EXPECT_EQ(o.code, kInfeasible);
    EXPECT_EQ(o.err, "infeasible: herd 16 is not a multiple of r = 17; nearest feasible herd: 17\n");
}

TEST(Cli, CheckOverflow) {
    const Outcome o = invoke({"check", "--divisors", "2,3,6"});
    EXPECT_EQ(o.code, kInvalidInput);
    EXPECT_EQ(o.err, "error: share sum equals 1\n");
    EXPECT_TRUE(o.out.empty());
}

TEST(Cli, InvalidInputs) {
    EXPECT_EQ(invoke({"check", "--divisors", "2,x,9"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"check", "--divisors", "2,,9"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"check", "--divisors", "-2,3"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"check", "--divisors", "2,0,5"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"check", "--divisors", ""}).code, kInvalidInput);
    EXPECT_EQ(invoke({"solve", "--divisors", "2,3,9", "--herd", "0"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"solve", "--divisors", "2,3,9"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"frobnicate"}).code, kInvalidInput);
    EXPECT_EQ(invoke({}).code, kInvalidInput);
    EXPECT_EQ(invoke({"check", "--divisors", "2,3,9", "--format", "xml"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"generate", "--heirs", "0", "--max-divisor", "9"}).code, kInvalidInput);
    EXPECT_EQ(invoke({"generate", "--heirs", "3", "--max-divisor", "1"}).code, kInvalidInput);
}

TEST(Cli, FormatBeforeSubcommand) {
    const Outcome o = invoke({"--format", "json", "check", "--divisors", "2,3,9"});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_EQ(o.out, R"({"divisors":["2","3","9"],"r":"17","m":"18","sum":{"num":"17","den":"18"}})"
                     "\n");
}

TEST(Cli, Breakdown) {
    const Outcome o = invoke({"breakdown", "--divisors", "2,3,9", "--herd", "17", "--format", "json"});
    EXPECT_EQ(o.code, kSuccess);
    const auto doc = nlohmann::json::parse(o.out);
    EXPECT_EQ(doc["leftover"]["num"], "17");
    EXPECT_EQ(doc["leftover"]["den"], "18");
    EXPECT_EQ(doc["topups"][2]["den"], "9");

    const Outcome infeasible = invoke({"breakdown", "--divisors", "2,3,9", "--herd", "16", "--format", "json"});
    EXPECT_EQ(infeasible.code, kSuccess);
    EXPECT_TRUE(nlohmann::json::parse(infeasible.out)["topups"].empty());
}

TEST(Cli, ExplainText) {
    const Outcome o = invoke({"explain", "--divisors", "2,3,9", "--herd", "17"});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_NE(o.out.find("[return] return 1"), std::string::npos);
    EXPECT_EQ(invoke({"explain", "--divisors", "2,3,9", "--herd", "16"}).code, kInfeasible);
}

TEST(Cli, Generate) {
    const Outcome o = invoke({"generate", "--heirs", "3", "--max-divisor", "9", "--max-loan", "1", "--format", "json"});
    EXPECT_EQ(o.code, kSuccess);
    const auto doc = nlohmann::json::parse(o.out);
    ASSERT_EQ(doc["puzzles"].size(), 6u);
    EXPECT_EQ(doc["puzzles"][2]["divisors"], nlohmann::json({"2", "3", "9"}));
    EXPECT_EQ(doc["puzzles"][2]["herd"], "17");
}

TEST(Cli, HelpExitsZero) {
    const Outcome o = invoke({"--help"});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_NE(o.out.find("generate"), std::string::npos);
}

const std::vector<std::vector<std::string>> kFixtures{
    {"check", "--divisors", "2,3,9"},
    {"check", "--divisors", "3,6,9,12"},
    {"solve", "--divisors", "2,3,9", "--herd", "17"},
    {"solve", "--divisors", "2,3,9", "--herd", "16"},
    {"solve", "--divisors", "2,3,9", "--herd", "40"},
    {"solve", "--divisors", "3,4,5,6", "--herd", "57"},
    {"solve", "--divisors", "3,6,9,12", "--herd", "50"},
    {"herds", "--divisors", "2,3,9", "--limit", "60"},
    {"herds", "--divisors", "3,6,9,12", "--limit", "100"},
    {"herds", "--divisors", "2,3,9", "--limit", "10"},
    {"breakdown", "--divisors", "2,3,9", "--herd", "17"},
    {"breakdown", "--divisors", "3,4,5,6", "--herd", "57"},
    {"breakdown", "--divisors", "2", "--herd", "2"},
    {"breakdown", "--divisors", "2,3,9", "--herd", "16"},
    {"explain", "--divisors", "2,3,9", "--herd", "17"},
    {"explain", "--divisors", "3,6,9,12", "--herd", "50"},
    {"explain", "--divisors", "2", "--herd", "2"},
    {"generate", "--heirs", "3", "--max-divisor", "9", "--max-loan", "1"},
    {"generate", "--heirs", "1", "--max-divisor", "2"},
    {"generate", "--heirs", "4", "--max-divisor", "12", "--max-loan", "11", "--duplicates"},
};

TEST(Cli, JsonRoundTripsByteExact) {
    for (auto args : kFixtures) {
        args.insert(args.end(), {"--format", "json"});
        const Outcome o = invoke(args);
        ASSERT_FALSE(o.out.empty()) << args[0];
        ASSERT_EQ(o.out.back(), '\n');
        const std::string body = o.out.substr(0, o.out.size() - 1);
        EXPECT_EQ(nlohmann::ordered_json::parse(body).dump(), body);
        EXPECT_TRUE(nlohmann::json::parse(body).is_object());
    }
}

TEST(Cli, TextAndJsonCarrySameNumbers) {
    for (const auto& args : kFixtures) {
        const Outcome text = invoke(args);
        auto json_args = args;
        json_args.insert(json_args.end(), {"--format", "json"});
        const Outcome json = invoke(json_args);
        EXPECT_EQ(text.code, json.code);
        EXPECT_EQ(digit_runs(text.out), digit_runs(json.out)) << args[0] << " " << args[2];
        EXPECT_EQ(text.err, json.err);
    }
}

}  // namespace
}  // namespace fairshare::cli
