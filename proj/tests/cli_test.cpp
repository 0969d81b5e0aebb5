/*
   Copyright 2026 The capelli Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CAPELLI_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path golden(const std::string& name) { return std::filesystem::path(CAPELLI_GOLDEN_DIR) / name; }

TEST(CliTest, Examples) {
    auto a = run("test -p 2 --poly \"x^2+x+1\" -d 3");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_NE(a.out.find("irreducible (passes-all-residue-tests)"), std::string::npos);

    auto b = run("test -p 3 --poly \"x^2+1\" -d 2");
    EXPECT_EQ(b.exit_code, 1);
    EXPECT_NE(b.out.find("alpha-is-dprime-power"), std::string::npos);

    auto c = run("test -p 7 --poly \"x+1\" -d 5");
    EXPECT_EQ(c.exit_code, 1);
    EXPECT_NE(c.out.find("prime-divisor-coprime"), std::string::npos);
}

TEST(CliTest, OracleAgreement) {
    auto r = run("test -p 3 --poly \"x^2+x+2\" -d 2 --oracle --json");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["oracle"]["verdict"], "irreducible");
    EXPECT_EQ(j["oracle"]["agrees"], true);
    EXPECT_FALSE(j.contains("timings"));
    EXPECT_TRUE(nlohmann::json::parse(run("test -p 3 --poly \"x^2+x+2\" -d 2 --json --timings").out)
                    .contains("timings"));
}

TEST(CliTest, CoeffsInput) {
    auto r = run("test -p 2 --coeffs \"[1,1,1]\" -d 3 --json");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["input"], "x^2+x+1");
    EXPECT_EQ(run("test -p 2 --coeffs \"[1,2,1]\" -d 3").exit_code, 2);
    EXPECT_EQ(run("test -p 2 --coeffs \"nope\" -d 3").exit_code, 2);
}

TEST(CliTest, ExitCodeMatrix) {
    struct Case {
        const char* args;
        int code;
    };
    const Case cases[] = {
        {"test -p 2 --poly \"x^2+x+1\" -d 1", 0},
        {"test -p 5 --poly \"x+3\" -d 4", 0},
        {"test -p 13 --poly \"x+2\" -d 3", 0},
        {"test -p 2 --poly \"x^2+x+1\" -d 2", 1},
        {"test -p 3 --poly \"x+1\" -d 4", 1},
        {"test -p 7 --poly \"x+4\" -d 4", 1},
        {"test -p 4 --poly \"x+1\" -d 2", 2},
        {"test -p 3 --poly \"x^2+2\" -d 2", 2},
        {"test -p 3 --poly \"2*x^2+1\" -d 2", 2},
        {"test -p 3 --poly \"x^2+5\" -d 2", 2},
        {"test -p 3 --poly \"x^2+1\" -d 0", 2},
        {"test -p 3 -d 2", 2},
        {"frobnicate", 2},
        {"prob -p 7 -d 3", 2},
        {"prob -p 7 -d 3 --exact --bound", 2},
        {"prob -p 4 -d 3 --exact", 2},
        {"prob -d 1 --bound", 2},
        {"prob -p 101 -k 2 -d 2 --census", 2},
        {"generate -p 2", 2},
        {"generate -p 2 --schedule 3,x", 2},
        {"replay --cert /nonexistent/cert.json", 2},
    };
    for (const auto& c : cases) EXPECT_EQ(run(c.args).exit_code, c.code) << c.args;
}

TEST(CliTest, GoldenJson) {
    EXPECT_EQ(run("test -p 2 --poly \"x^2+x+1\" -d 3 --oracle --json").out, slurp(golden("test_p2_x2x1_d3.json")));
    EXPECT_EQ(run("generate -p 2 --start \"x^2+x+1\" --schedule 3,3 --json").out,
              slurp(golden("generate_p2_schedule33.json")));
    EXPECT_EQ(run("prob -p 7 -k 1 -d 6 --census --json").out, slurp(golden("prob_census_p7_d6.json")));
    EXPECT_EQ(run("bench -p 2 --start \"x^2+x+1\" --schedule 3,3,3 --json").out, slurp(golden("bench_p2_333.json")));
}

TEST(CliTest, JsonIsByteIdenticalAcrossRuns) {
    for (const char* args : {"prob -p 7 -k 1 -d 3 --sample 5000 --seed 3 --json", "prob -p 3 -k 3 -d 2 --census --json",
                             "generate -p 3 --target-degree 100 --json", "test -p 5 --poly \"x^2+2\" -d 4 --json"}) {
        EXPECT_EQ(run(args).out, run(args).out) << args;
    }
}

TEST(CliTest, Prob) {
    EXPECT_NE(run("prob -p 7 -k 1 -d 3 --exact").out.find("= 2/3"), std::string::npos);
    EXPECT_NE(run("prob -p 7 -k 1 -d 6 --census").out.find("2/6"), std::string::npos);
    EXPECT_NE(run("prob -d 12 --bound").out.find(": 1/6"), std::string::npos);
    const auto j = nlohmann::json::parse(run("prob -p 7 -k 1 -d 3 --exact --include-zero --json").out);
    EXPECT_EQ(j["value"], "4/7");
    EXPECT_EQ(j["convention"], "include-zero");
    const auto s = nlohmann::json::parse(run("prob -p 3 -k 1 -d 4 --sample 300 --json").out);
    EXPECT_EQ(s["value"], "0");
}

TEST(CliTest, GenerateAndReplay) {
    const auto cert = std::filesystem::temp_directory_path() / "capelli_cli_test_cert.json";
    auto g = run("generate -p 2 --start \"x^2+x+1\" --schedule 3,3 --cert " + cert.string());
    EXPECT_EQ(g.exit_code, 0);
    EXPECT_NE(g.out.find("final: x^18+x^9+1"), std::string::npos);
    EXPECT_EQ(run("replay --cert " + cert.string()).exit_code, 0);

    auto doc = nlohmann::ordered_json::parse(slurp(cert));
    doc["steps"][1]["prime_tests"][0]["result"] = "x^2";
    std::ofstream(cert) << doc.dump(2);
    EXPECT_EQ(run("replay --cert " + cert.string()).exit_code, 1);
    std::filesystem::remove(cert);

    auto rejected = run("generate -p 3 --start \"x^2+1\" --schedule 2 --json");
    EXPECT_EQ(rejected.exit_code, 1);
    const auto j = nlohmann::json::parse(rejected.out);
    EXPECT_EQ(j["verdict"], "rejected");
    EXPECT_EQ(j["reason"], "alpha-is-dprime-power");

    auto paranoid = run("generate -p 3 --start \"x^2+x+2\" --schedule 2,2,3 --paranoid");
    EXPECT_EQ(paranoid.exit_code, 1);  // 3 = p
    EXPECT_EQ(run("generate -p 3 --start \"x^2+x+2\" --schedule 2,2,2 --paranoid").exit_code, 0);
}

TEST(CliTest, BenchStopsAtRejection) {
    auto r = run("bench -p 2 --start \"x^2+x+1\" --schedule 3,2,3 --json");
    EXPECT_EQ(r.exit_code, 1);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["steps"].size(), 2U);
    EXPECT_EQ(j["steps"][1]["verdict"], "reducible");
    EXPECT_EQ(j["completed"], false);

    const auto one = nlohmann::json::parse(run("bench -p 2 --start \"x^2+x+1\" --schedule 1 --json").out);
    EXPECT_EQ(one["steps"][0]["work_ratio"], "1.000");
}

}  // namespace
