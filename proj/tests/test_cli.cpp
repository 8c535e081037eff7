/**************************************************************************
 * test_cli.cpp
 *
 * Copyright 2026 The mdscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(MDS_BINARY) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST(Cli, CountJson) {
    const auto r = run("count --k 2 --n 4 --q 3 --format json --no-timing");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["gamma"], "8");
    EXPECT_EQ(j["gamma_tilde"], "1");
    EXPECT_EQ(j["elapsed_ms"], 0);
}

TEST(Cli, BothMethodsAgree) {
    const auto r = run("count --k 2 --n 5 --q 4 --method both --format json --no-timing");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("162"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("count --k 2 --n 4 --q 6").status, 1);
    EXPECT_EQ(run("count --k 3 --n 8 --q 16").status, 2);
    EXPECT_EQ(run("no-such-command").status, 1);
    EXPECT_EQ(run("count --k 2 --n 4").status, 1);
}

TEST(Cli, OutputIsReproducibleAcrossThreads) {
    const auto a = run("count --k 3 --n 6 --q 4 --format json --no-timing --threads 1");
    const auto b = run("count --k 3 --n 6 --q 4 --format json --no-timing --threads 4");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = run("code --k 2 --n 4 --q 2 --spectrum sample:300:5 --threads 1");
    const auto d = run("code --k 2 --n 4 --q 2 --spectrum sample:300:5 --threads 3");
    ASSERT_EQ(c.status, 0);
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, Asympt) {
    const auto r = run("asympt --k 3 --n 10 --format json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["b1"], "110");
    EXPECT_EQ(j["b2"], "5561");
}

TEST(Cli, SectionsCsv) {
    const auto r = run("sections --k 2 --n 4 --q 2 --max-r 2 --exhaustive");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("r,subset_id,norm,ann_in_g", 0), 0u);
    std::size_t lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    EXPECT_EQ(lines, 1u + 6u + 15u);
}

TEST(Cli, InclusionExclusion) {
    const auto r = run("incl-excl --k 2 --n 4 --q 3 --verify-against-census --format json --no-timing");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("\"8\""), std::string::npos);
}

TEST(Cli, WeightOfForm) {
    const auto r = run("weight --k 2 --n 4 --q 2 --method both --format json "
                       "--form '[{\"index\":[1,2],\"coeff\":1},{\"index\":[3,4],\"coeff\":1}]'");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("20"), std::string::npos);
}

TEST(Cli, VerifyQuick) {
    const auto r = run("verify --suite fields --scale quick");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
