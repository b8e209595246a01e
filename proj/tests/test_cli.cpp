#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qyt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = qyt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    auto r = cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

// Minimal RFC 4180 reader: quoted fields, doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields(1);
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') fields.back() += '"', ++i;
                else if (c == '"') quoted = false;
                else fields.back() += c;
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.emplace_back();
            } else {
                fields.back() += c;
            }
        }
        rows.push_back(fields);
    }
    return rows;
}

std::vector<std::vector<std::string>> csv_of(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("csv");
    auto r = cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return parse_csv(r.out);
}

}  // namespace

TEST(Cli, CountExamples) {
    EXPECT_EQ(cli({"count", "--shape", "2,2,1", "--exact-entry", "3"}).out, "3\n");
    EXPECT_EQ(cli({"count", "--shape", "3,2", "--syt"}).out, "5\n");
    EXPECT_EQ(cli({"count", "--shape", "2,2", "--ssyt", "3"}).out, "6\n");
    EXPECT_EQ(cli({"count", "--shape", "2,2,1", "--max-entry", "4"}).out, "5\n");
}

TEST(Cli, BoardExamples) {
    EXPECT_EQ(cli({"board", "--shape", "3,2"}).out, "2,2,2,3,3\n");
    EXPECT_EQ(cli({"board", "--shape", "3,2", "--plus-one"}).out, "3,3,3,4,4\n");
    EXPECT_EQ(cli({"board", "--shape", "2,2,1", "--hits"}).out, "0,48,72,0,0,0\n");
}

TEST(Cli, VerifyExitCodes) {
    auto pass = cli({"verify", "hit", "--max-n", "6"});
    EXPECT_EQ(pass.code, 0);
    EXPECT_NE(pass.out.find("hit: pass"), std::string::npos);

    auto fail = cli({"verify", "printed-pnk", "--format", "json"});
    EXPECT_EQ(fail.code, 1);
    auto j = nlohmann::json::parse(fail.out);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["counterexample"]["expansion"], "P_{1,1}");

    EXPECT_EQ(cli({"verify", "nope"}).code, 2);
    EXPECT_EQ(cli({"verify", "hit", "--max-n", "0"}).code, 2);
    EXPECT_EQ(cli({"verify"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"count", "--shape", "2,2", "--bogus"}).code, 2);
    EXPECT_EQ(cli({"count", "--shape", "2,2", "--syt", "--ssyt", "2"}).code, 2);
    EXPECT_EQ(cli({"count", "--shape", "2,x"}).code, 2);
    EXPECT_EQ(cli({"count", "--shape", "2,2", "--format", "xml"}).code, 2);
    EXPECT_EQ(cli({"board", "--shape", "2,1", "--hits", "--q-hits"}).code, 2);
    EXPECT_EQ(cli({"table", "a-coeffs", "--n", "0"}).code, 2);
    auto r = cli({"count"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, LimitRefuses) {
    auto r = cli({"board", "--shape", "3,2", "--hits", "--limit", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("S_5"), std::string::npos);
    EXPECT_EQ(cli({"board", "--shape", "3,2", "--hits", "--limit", "5"}).code, 0);
    EXPECT_EQ(cli({"verify", "hit", "--max-n", "6", "--limit", "5"}).code, 2);
}

TEST(Cli, RskExample) {
    auto r = cli({"rsk", "45312"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("shape: 2,2,1\n"), std::string::npos);
    EXPECT_NE(r.out.find("Des(Q): {2,3}\n"), std::string::npos);
    auto j = json_of({"rsk", "45312"});
    EXPECT_EQ(j["recording_descents"].dump(), "[2,3]");
    EXPECT_EQ(j["shape"].dump(), "[2,2,1]");
    // multiset word
    EXPECT_EQ(json_of({"rsk", "2112"})["insertion"], "1,1,2/2");
}

TEST(Cli, TableExample) {
    auto r = cli({"table", "a-coeffs", "--n", "6"});
    EXPECT_NE(r.out.find("m=3: 1,1,-8,8,-1,-1\n"), std::string::npos);
    auto j = json_of({"table", "a-coeffs", "--n", "6"});
    EXPECT_EQ(j["rows"][2]["a"][3], -8);
}

TEST(Cli, CsvAndJsonAgree) {
    {
        auto j = json_of({"board", "--shape", "2,2,1", "--hits"});
        auto c = csv_of({"board", "--shape", "2,2,1", "--hits"});
        ASSERT_EQ(c.size(), j["hits"].size() + 1);
        EXPECT_EQ(c[0], (std::vector<std::string>{"k", "hits"}));
        for (std::size_t k = 0; k < j["hits"].size(); ++k) EXPECT_EQ(std::stoll(c[k + 1][1]), j["hits"][k].get<long long>());
    }
    {
        auto j = json_of({"board", "--shape", "3,2", "--q-hits"});
        auto c = csv_of({"board", "--shape", "3,2", "--q-hits"});
        std::size_t terms = 0;
        for (const auto& t : j["q_hits"]) terms += t.size();
        ASSERT_EQ(c.size(), terms + 1);
        for (std::size_t i = 1; i < c.size(); ++i) {
            const auto& poly = j["q_hits"][std::stoi(c[i][0])];
            bool found = false;
            for (const auto& term : poly) found = found || (term[0] == std::stoi(c[i][1]) && term[1] == std::stoll(c[i][2]));
            EXPECT_TRUE(found) << i;
        }
    }
    {
        auto j = json_of({"count", "--shape", "2,2,1"});
        auto c = csv_of({"count", "--shape", "2,2,1"});
        ASSERT_EQ(c.size(), j["rows"].size() + 1);
        for (std::size_t i = 0; i < j["rows"].size(); ++i) {
            EXPECT_EQ(c[i + 1][0], "2,2,1");
            EXPECT_EQ(std::stoi(c[i + 1][1]), j["rows"][i]["exact_entry"].get<int>());
            EXPECT_EQ(std::stoll(c[i + 1][2]), j["rows"][i]["count"].get<long long>());
        }
    }
    {
        auto j = json_of({"table", "a-coeffs", "--n", "5"});
        auto c = csv_of({"table", "a-coeffs", "--n", "5"});
        ASSERT_EQ(c.size(), 36u + 1);
        for (std::size_t i = 1; i < c.size(); ++i)
            EXPECT_EQ(std::stoll(c[i][3]), j["rows"][std::stoi(c[i][1])]["a"][std::stoi(c[i][2])].get<long long>());
    }
    {
        auto j = cli({"verify", "printed-pnk", "--no-timing", "--format", "json"});
        auto c = cli({"verify", "printed-pnk", "--no-timing", "--format", "csv"});
        EXPECT_EQ(j.code, 1);
        EXPECT_EQ(c.code, 1);
        auto report = nlohmann::json::parse(j.out);
        auto rows = parse_csv(c.out);
        ASSERT_EQ(rows.size(), 2u);
        EXPECT_EQ(rows[0], (std::vector<std::string>{"suite", "status", "ms", "bounds", "counterexample"}));
        EXPECT_EQ(rows[1][0], report["suite"]);
        EXPECT_EQ(rows[1][1], report["status"]);
        EXPECT_EQ(std::stoll(rows[1][2]), report["ms"].get<long long>());
        EXPECT_EQ(nlohmann::json::parse(rows[1][3]), report["bounds"]);
        EXPECT_EQ(nlohmann::json::parse(rows[1][4]), report["counterexample"]);
    }
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "lattice", "--max-n", "5", "--seed", "11", "--no-timing", "--format", "json"},
             {"expand", "genfun", "--n", "4"},
             {"expand", "schur", "--shape", "2,1", "--vars", "3", "--format", "csv"},
             {"board", "--shape", "2,2", "--q-hits", "--format", "json"}}) {
        auto a = cli(args), b = cli(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Cli, EnvironmentBound) {
    ::setenv("QYT_MAX_N", "4", 1);
    auto j = json_of({"verify", "summation"});
    EXPECT_EQ(j["bounds"]["max_n"], 4);
    // an explicit flag still wins
    EXPECT_EQ(json_of({"verify", "summation", "--max-n", "3"})["bounds"]["max_n"], 3);
    ::setenv("QYT_MAX_N", "four", 1);
    EXPECT_EQ(cli({"verify", "summation"}).code, 2);
    ::unsetenv("QYT_MAX_N");
    EXPECT_EQ(json_of({"verify", "summation"})["bounds"]["max_n"], 7);
}

TEST(Cli, Expand) {
    auto r = cli({"expand", "genfun", "--n", "3"});
    EXPECT_EQ(r.out, "s_(3): 1\ns_(2,1): qt + q^2t\ns_(1,1,1): q^3t^2\n");
    auto plain = cli({"expand", "genfun", "--n", "3", "--plain"});
    EXPECT_EQ(plain.out, "s_(3): 1\ns_(2,1): 2t\ns_(1,1,1): t^2\n");
    auto s = json_of({"expand", "schur", "--shape", "2,1", "--vars", "3"});
    long long total = 0;
    for (const auto& t : s["terms"]) total += t["coeff"].get<long long>();
    EXPECT_EQ(total, 8);  // s_{2,1}(1,1,1)
    EXPECT_EQ(cli({"expand"}).code, 2);
}
