#include "cli.hpp"
#include "report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sametype {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(CliReproduce, TableShowsPaperDisplays) {
    const auto r = run({"reproduce"});
    EXPECT_EQ(r.code, 0);
    for (const char* s : {"3/(4-s)", "1/(2-s)", "6/(7-s)", "2/(3-s)", "NOT-EQUIVALENT"})
        EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(CliReproduce, JsonReportRoundTrips) {
    const auto r = run({"reproduce", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = report::document_from_json(report::json::parse(r.out));
    EXPECT_EQ(doc.schema_version, "1.0");
    EXPECT_EQ(doc.command, "reproduce");
    EXPECT_FALSE(doc.results.at("definitions_agree").get<bool>());
    const auto parsed = report::type_check_report_from_json(doc.results);
    EXPECT_EQ(parsed, counterexample_report(Rational(1, 4), Rational(1, 2)));
    EXPECT_EQ(report::to_json(doc).dump(2) + "\n", r.out);
}

TEST(CliReproduce, RoundTripOverManyReports) {
    for (const auto& [q, a] : std::vector<std::pair<int, int>>{{4, 2}, {9, 2}, {8, 3}, {16, 4}}) {
        const auto original = counterexample_report(Rational(1, q), Rational(1, a));
        const auto text = report::to_json(original).dump();
        EXPECT_EQ(report::type_check_report_from_json(report::json::parse(text)), original);
    }
}

TEST(CliReproduce, IdentityOverrideIsAMismatch) {
    const auto r = run({"reproduce", "--alpha", "1", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    const auto j = report::json::parse(r.out);
    EXPECT_TRUE(j.at("results").at("definitions_agree").get<bool>());
    EXPECT_NE(r.err.find("mismatch"), std::string::npos);
}

TEST(CliReproduce, IrrationalNeedsFlag) {
    EXPECT_EQ(run({"reproduce", "--q", "1/2"}).code, 3);
    const auto r = run({"reproduce", "--q", "1/2", "--allow-float", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(report::json::parse(r.out).at("results").at("exact").get<bool>());
}

TEST(CliCheck, ExistsMode) {
    const auto r = run({"check", "--q1", "1/4", "--q2", "1/2", "--mode", "exists", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto res = report::json::parse(r.out).at("results");
    EXPECT_EQ(res.at("def21_witness_fg"), "1/3");
    EXPECT_TRUE(res.at("def21_witness_gf").is_null());
    EXPECT_EQ(res.at("def22_witness_fg").at("exact"), "1/2");
}

TEST(CliCheck, FixedMode) {
    auto res = report::json::parse(run({"check", "--q1", "1/2", "--q2", "1/2", "--alpha", "1", "--mode", "fixed",
                                        "--format", "json"}).out)
                   .at("results");
    EXPECT_TRUE(res.at("def22_fg").get<bool>());
    EXPECT_TRUE(res.at("def21_fg").get<bool>());

    res = report::json::parse(run({"check", "--q1", "1/4", "--q2", "1/2", "--alpha", "1/2", "--mode", "fixed",
                                   "--format", "json"}).out)
              .at("results");
    EXPECT_TRUE(res.at("def22_fg").get<bool>());
    EXPECT_FALSE(res.at("def21_fg").get<bool>());
    EXPECT_FALSE(res.at("def21_gf").get<bool>());
}

TEST(CliCheck, UsageErrors) {
    EXPECT_EQ(run({"check", "--q1", "1/4", "--q2", "1/2", "--mode", "fixed"}).code, 2);
    EXPECT_EQ(run({"check", "--q1", "1/4"}).code, 2);
    EXPECT_EQ(run({"check", "--q1", "1/4", "--mix1", "1/2:1", "--q2", "1/2"}).code, 2);
    EXPECT_EQ(run({"check", "--q1", "0.25", "--q2", "1/2"}).code, 2);
    EXPECT_EQ(run({"check", "--q1", "1/4", "--q2", "1/2", "--mode", "sometimes"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check", "--q1", "3/2", "--q2", "1/2"}).code, 3);
}

TEST(CliUtilities, Thin) {
    const auto r = run({"thin", "--q", "1/4", "--alpha", "1/2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("6/(7-s)"), std::string::npos);
    EXPECT_EQ(run({"thin", "--q", "1/4", "--alpha", "3/2"}).code, 3);
}

TEST(CliUtilities, ScaleIdentity) {
    const auto r = run({"scale", "--q", "1/4", "--alpha", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto res = report::json::parse(r.out).at("results");
    EXPECT_EQ(res.at("identified_as"), "geometric(1/4)");
    EXPECT_EQ(res.at("pgf").at("display"), "3/(4-s)");
}

TEST(CliUtilities, PmfFormats) {
    const auto j = report::json::parse(run({"pmf", "--q", "1/4", "--n", "3", "--format", "json"}).out);
    EXPECT_EQ(j.at("results").at("pmf"), (report::json{"3/4", "3/16", "3/64"}));
    const auto csv = run({"pmf", "--q", "1/4", "--n", "3", "--format", "csv"});
    EXPECT_EQ(csv.out, "k,pmf,df,survival\n0,3/4,0,1\n1,3/16,3/4,1/4\n2,3/64,15/16,1/16\n");
}

TEST(CliUtilities, ValidateMoments) {
    auto j = report::json::parse(run({"validate-moments", "--values", "1,1/2,9/10", "--order", "1", "--format", "json"}).out);
    EXPECT_FALSE(j.at("results").at("passed").get<bool>());
    EXPECT_EQ(j.at("results").at("first_failure").at("k"), 1);
    j = report::json::parse(run({"validate-moments", "--q", "1/4", "--prefix", "8", "--order", "4", "--format", "json"}).out);
    EXPECT_TRUE(j.at("results").at("passed").get<bool>());
    EXPECT_EQ(run({"validate-moments", "--values", "1,1/2", "--order", "3"}).code, 3);
}

TEST(CliOutput, DeterministicAndOutFile) {
    EXPECT_EQ(run({"reproduce", "--format", "json"}).out, run({"reproduce", "--format", "json"}).out);
    EXPECT_EQ(run({"check", "--mix1", "1/2:1/2,1/4:1/2", "--mix2", "1/4:1/2,1/16:1/2"}).out,
              run({"check", "--mix1", "1/4:1/2,1/2:1/2", "--mix2", "1/16:1/2,1/4:1/2"}).out);
    const auto path = (std::filesystem::temp_directory_path() / "same_type_cli_test.json").string();
    const auto r = run({"reproduce", "--format", "json", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream contents;
    contents << f.rdbuf();
    EXPECT_EQ(contents.str(), run({"reproduce", "--format", "json"}).out);
    std::remove(path.c_str());
}

}  // namespace
}  // namespace sametype
