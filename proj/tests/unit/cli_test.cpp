#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "loopbv/cli/cli.hpp"
#include "loopbv/cli/io.hpp"
#include "loopbv/errors.hpp"
#include "support/oracles.hpp"

namespace loopbv::cli {
namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string fixture(const char* name)
{
    return testing::fixture(std::string("resonance/") + name);
}

TEST(Cli, HelpListsEverySubcommand)
{
    const Result r = invoke({"--help"});
    EXPECT_EQ(r.status, 0);
    for (const char* sub : {"ring", "bv", "pages", "series", "verify", "resonance"})
        EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
    EXPECT_EQ(invoke({"bv", "--help"}).status, 0);
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(invoke({}).status, kExitInput);
    EXPECT_EQ(invoke({"verify", "--bogus"}).status, kExitInput);
    EXPECT_EQ(invoke({"pages", "--case", "C"}).status, kExitInput);
    EXPECT_EQ(invoke({"pages", "--max-degree", "-1"}).status, kExitInput);
    EXPECT_EQ(invoke({"verify", "--n", "0"}).status, kExitInput);
    EXPECT_EQ(invoke({"series", "--format", "csv"}).status, kExitInput);
    EXPECT_EQ(invoke({"ring", "--min-degree", "5", "--max-degree", "1"}).status, kExitInput);
}

TEST(Cli, SeriesAverage)
{
    const Result r = invoke({"series", "--n", "3", "--which", "lg", "--average"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("average: 2/3"), std::string::npos) << r.out;
    const Result quiet = invoke({"series", "--n", "3", "--average", "--quiet"});
    EXPECT_EQ(quiet.out, "2/3\n");
    const Result expand = invoke({"series", "--n", "1", "--expand", "6", "--format", "json"});
    const Json j = Json::parse(expand.out);
    EXPECT_EQ(j["expansion"], Json({1, 0, 2, 0, 2, 0, 2}));
}

TEST(Cli, VerifyPassesForAllCases)
{
    const Result one = invoke({"verify", "--n", "1", "--case", "A_v", "--max-degree", "100"});
    EXPECT_EQ(one.status, 0);
    EXPECT_NE(one.out.find("PASS"), std::string::npos);
    const Result all = invoke({"--format", "json", "verify", "--n", "2", "--case", "all"});
    EXPECT_EQ(all.status, 0);
    EXPECT_TRUE(Json::parse(all.out)["pass"].get<bool>());
}

TEST(Cli, PagesJsonRoundTrip)
{
    const Result r = invoke({"pages", "--n", "2", "--case", "B_wxvw", "--component", "g", "--max-degree", "40",
                             "--format", "json"});
    ASSERT_EQ(r.status, 0);
    const Page loaded = page_from_json(Json::parse(r.out));
    const Page direct = e3_page(SSConfig{BvAlgebra(AlgebraConfig(2, BvCase::B_wxvw)), Component::g, 40});
    EXPECT_EQ(loaded, direct);

    const Result e2 = invoke({"pages", "--component", "e", "--page", "2", "--max-degree", "12", "--format", "json"});
    EXPECT_EQ(page_from_json(Json::parse(e2.out)),
              e2_page(SSConfig{BvAlgebra(AlgebraConfig(1, BvCase::A_v)), Component::e, 12}));
}

TEST(Cli, PagesCsv)
{
    const Result r = invoke({"pages", "--component", "e", "--max-degree", "5", "--format", "csv"});
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, 8), "p,q,dim\n");
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    std::vector<std::pair<int, int>> cells;
    while (std::getline(lines, line)) {
        int p = 0;
        int q = 0;
        char comma = 0;
        std::istringstream(line) >> p >> comma >> q;
        cells.emplace_back(p, q);
    }
    EXPECT_FALSE(cells.empty());
    EXPECT_TRUE(std::is_sorted(cells.begin(), cells.end()));
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::string> args{"--format", "json", "pages", "--n", "3", "--component", "both"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    const std::vector<std::string> check{"bv", "check", "--n", "2", "--case", "B_w", "--format", "json"};
    EXPECT_EQ(invoke(check).out, invoke(check).out);
}

TEST(Cli, BvTable)
{
    const Result r = invoke({"bv", "table", "--n", "1", "--case", "A_vxw", "--component", "g", "--format", "json"});
    ASSERT_EQ(r.status, 0);
    const Json rows = Json::parse(r.out);
    bool seen = false;
    for (const auto& row : rows)
        if (row["monomial"] == "x*v") {
            EXPECT_EQ(row["delta"], "v + x^2*v*w");
            EXPECT_EQ(row["loop_degree"], -1);
            EXPECT_EQ(row["component"], "g");
            seen = true;
        }
    EXPECT_TRUE(seen);
    EXPECT_EQ(invoke({"bv", "table", "--format", "csv"}).out.substr(0, 36), "monomial,component,loop_degree,delta");
}

TEST(Cli, BvCheckExitStatus)
{
    EXPECT_EQ(invoke({"bv", "check", "--n", "1", "--case", "B_w"}).status, kExitOk);
    const Result bad = invoke({"bv", "check", "--n", "2", "--case", "B_w"});
    EXPECT_EQ(bad.status, kExitFailed);
    EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST(Cli, RingListing)
{
    const Result r = invoke({"ring", "--n", "1", "--component", "g", "--max-degree", "-3", "--format", "csv"});
    EXPECT_EQ(r.out, "monomial,loop_degree,top_degree,component\nx^3*v,-3,0,g\n");
}

TEST(Cli, ResonanceExitStatuses)
{
    EXPECT_EQ(invoke({"resonance", "--input", fixture("mixed_period_n2.json")}).status, kExitOk);
    EXPECT_EQ(invoke({"resonance", "--input", fixture("nondeg_n1.json"), "--check", "nondegenerate"}).status,
              kExitOk);
    const Result neg = invoke({"resonance", "--input", fixture("negative_n1.json")});
    EXPECT_EQ(neg.status, kExitFailed);
    EXPECT_NE(neg.out.find("diff             = -1/2"), std::string::npos) << neg.out;
    EXPECT_EQ(invoke({"resonance", "--input", "missing.json"}).status, kExitInput);
    EXPECT_EQ(invoke({"resonance", "--input", fixture("bad_l_range.json")}).status, kExitInput);
    EXPECT_EQ(invoke({"resonance", "--input", fixture("mixed_n3.json"), "--check", "nondegenerate"}).status,
              kExitInput);
}

TEST(Cli, MalformedJsonReportsPosition)
{
    const Result r = invoke({"resonance", "--input", fixture("malformed.json")});
    EXPECT_EQ(r.status, kExitInput);
    EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("column"), std::string::npos);
}

TEST(Cli, ResonanceJsonReport)
{
    const Result r = invoke({"--format", "json", "resonance", "--input", fixture("nondeg_n2.json"), "--morse", "1000"});
    ASSERT_EQ(r.status, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["target"], "3/4");
    EXPECT_EQ(j["sum"], "3/4");
    EXPECT_EQ(j["diff"], "0/1");
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["morse"]["q"], 1000);
    const Result nd =
        invoke({"--format", "json", "resonance", "--input", fixture("nondeg_n1.json"), "--check", "nondegenerate"});
    EXPECT_EQ(Json::parse(nd.out)["target"], "2/1");
}

TEST(Cli, ParseResonanceInputErrors)
{
    EXPECT_THROW(parse_resonance_input(R"({"geodesics": []})"), InputError);
    EXPECT_THROW(parse_resonance_input(R"({"n": 1, "geodesics": [{"label": "a"}]})"), InputError);
    EXPECT_THROW(parse_resonance_input(R"({"n": 1, "geodesics": [{"label": "a", "initial_index": 0,
        "mean_index": "1/0", "period": 2, "type_numbers": []}]})"),
                 InputError);
    EXPECT_THROW(parse_resonance_input(R"({"n": 1, "geodesics": [{"label": "a", "initial_index": 0,
        "mean_index": "1", "period": 2, "type_numbers": [{"m":1,"l":0,"k":1},{"m":1,"l":0,"k":2}]}]})"),
                 InputError);
    const auto ok = parse_resonance_input(R"({"n": 2, "geodesics": [{"label": "a", "initial_index": 3,
        "mean_index": 2, "period": 2, "type_numbers": [], "nullities": [0, 1]}]})");
    EXPECT_EQ(ok.n, 2);
    EXPECT_EQ(ok.records.at(0).mean_index, Rational(2));
    EXPECT_EQ(ok.records.at(0).nullities, (std::vector<int>{0, 1}));
}

} // namespace
} // namespace loopbv::cli
