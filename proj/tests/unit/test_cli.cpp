// Copyright 2026 The effnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "effnoise_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string &args) {
    auto err_path = scratch() / "stderr.txt";
    std::string cmd = std::string(EFFNOISE_CLI) + " " + args + " 2>" + err_path.string();
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        out.push_back(line);
    }
    return out;
}

void write(const std::filesystem::path &p, const std::string &text) {
    std::ofstream out(p);
    out << text;
}

TEST(Cli, ChannelSchemaAndNoiselessRow) {
    auto r = run("channel --code repetition --m 1,3 --p-grid 0.5:1:3");
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], "code,m,p,lambda0,lambda1,lambda2,lambda3,mu0,mu1,mu2,mu3,p_eff");
    EXPECT_EQ(rows[1].rfind("repetition,1,0.5,", 0), 0u);
    EXPECT_EQ(rows[6], "repetition,3,1,1,0,0,0,1,0,0,0,");
}

TEST(Cli, ChannelSortsByMThenP) {
    auto r = run("channel --code ghz:5,cluster_ring:5,repetition:3 --p-grid 0.9:1:2");
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[1].rfind("repetition,3,0.9", 0), 0u);
    EXPECT_EQ(rows[2].rfind("repetition,3,1,", 0), 0u);
    EXPECT_EQ(rows[3].rfind("ghz,5,0.9", 0), 0u);
    EXPECT_EQ(rows[4].rfind("cluster_ring,5,0.9", 0), 0u);
    EXPECT_NE(rows[4].back(), ',');
}

TEST(Cli, CustomChannel) {
    auto r = run("channel --code repetition:3 --noise custom --lambda 0.9,0.05,0.03,0.02");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out)[1].rfind("repetition,3,NA,", 0), 0u);
    EXPECT_EQ(run("channel --code repetition:3 --noise custom --lambda 0.9,0.2,0,0").code, 2);
    EXPECT_EQ(run("channel --code repetition:3 --noise white --lambda 1,0,0,0 --p 1").code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("lifetime --code ghz:3").code, 2);
    EXPECT_EQ(run("lifetime --code ghz:3 --n-grid ''").code, 2);
    EXPECT_EQ(run("channel --code ghz --p 0.5").code, 2);
    EXPECT_EQ(run("channel --code ghz:3 --p-grid 0.5:0.4:3").code, 2);
    EXPECT_EQ(run("channel --code ghz:3 --p-grid 0:1:0").code, 2);
    EXPECT_EQ(run("channel --code ghz:4 --p 0.5").code, 2);
    EXPECT_EQ(run("concat --m1 3").code, 2);
    EXPECT_EQ(run("lifetime --code ghz:3 --n-grid 4 --tol -1").code, 2);
    EXPECT_EQ(run("negativity --code ghz:3 --p-grid 0.5:1:3 --n-grid 4").code, 2);
}

TEST(Cli, ResourceLimit) {
    auto r = run("channel --code repetition:13 --p 0.9");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("resource"), std::string::npos) << r.err;
}

TEST(Cli, LifetimeRows) {
    auto r = run("lifetime --code ghz --m 1,3 --n-grid 2,4");
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], "encoding,m,N,p_crit,residual");
    EXPECT_EQ(rows[1].rfind("ghz,1,2,0.57735", 0), 0u) << rows[1];
}

TEST(Cli, NegativityRowsAndCrossingReport) {
    auto r = run("negativity --code ghz:5,cluster_ring:5 --p 0.95 --n-grid 2:40");
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 1u + 2 * 39);
    EXPECT_EQ(rows[0], "encoding,m,N,negativity");
    EXPECT_NE(r.err.find("N_crit ghz:5 vs cluster_ring:5 = "), std::string::npos) << r.err;
    auto one = run("negativity --code ghz:1,ghz:3 --p 1 --n-grid 2,100");
    for (std::size_t i = 1; i < lines(one.out).size(); ++i) {
        EXPECT_EQ(lines(one.out)[i].substr(lines(one.out)[i].rfind(',') + 1), "0.5");
    }
}

TEST(Cli, ConcatRows) {
    auto r = run("concat --m1 1,3 --m2 1,3");
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], "m1,m2,p_c,grid_checked");
    EXPECT_EQ(rows[1], "1,1,NA,true");
    EXPECT_EQ(rows[4].rfind("3,3,0.88", 0), 0u) << rows[4];
    EXPECT_EQ(rows[4].substr(rows[4].rfind(',') + 1), "true");
}

TEST(Cli, ValidateBuiltinsAndFiles) {
    auto ok = run("validate");
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);

    auto good = run(std::string("validate --code-file ") + EFFNOISE_SOURCE_DIR + "/codes/five_qubit_cluster_ring.json");
    EXPECT_EQ(good.code, 0) << good.out << good.err;

    auto malformed = scratch() / "malformed.json";
    write(malformed, "{\n  \"label\": \"x\",\n  \"m\": 3,\n  \"generators\": [\"ZZI\" \"IZZ\"]\n}\n");
    auto bad = run("validate --code-file " + malformed.string());
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 4"), std::string::npos) << bad.err;

    auto failing = scratch() / "anticommuting.json";
    write(failing,
          R"({"label":"a","m":3,"generators":["ZZI","IXX"],"logical_x":"XXX","logical_z":"ZII",)"
          R"("recovery_alphabet":"full"})");
    auto invalid = run("validate --code-file " + failing.string());
    EXPECT_EQ(invalid.code, 4);
    EXPECT_NE(invalid.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UserFiveQubitCodeGivesTheBuiltinTable) {
    auto builtin = run("channel --code cluster_ring:5 --p-grid 0:1:21");
    auto user = run(std::string("channel --code-file ") + EFFNOISE_SOURCE_DIR +
                    "/codes/five_qubit_cluster_ring.json --p-grid 0:1:21");
    ASSERT_EQ(builtin.code, 0);
    ASSERT_EQ(user.code, 0) << user.err;
    auto a = lines(builtin.out);
    auto b = lines(user.out);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        // Same p and channel columns; only the label and the estimate differ.
        auto strip = [](const std::string &row) {
            auto first = row.find(',');
            auto last = row.rfind(',');
            return row.substr(first, last - first);
        };
        EXPECT_EQ(strip(a[i]), strip(b[i]));
    }
}

TEST(Cli, ConfigFileAndOverrides) {
    auto cfg = scratch() / "run.json";
    write(cfg, R"({"command": "channel", "code": "repetition:3", "p_grid": "0:1:5", "jobs": 2})");
    auto base = run("channel --config " + cfg.string());
    ASSERT_EQ(base.code, 0) << base.err;
    EXPECT_EQ(lines(base.out).size(), 6u);
    auto over = run("channel --config " + cfg.string() + " --p-grid 0:1:3");
    ASSERT_EQ(over.code, 0) << over.err;
    EXPECT_EQ(lines(over.out).size(), 4u);

    auto wrong = scratch() / "wrong.json";
    write(wrong, R"({"command": "lifetime", "code": "ghz:3"})");
    EXPECT_EQ(run("channel --config " + wrong.string()).code, 2);
    write(wrong, R"({"colour": 3})");
    EXPECT_EQ(run("channel --config " + wrong.string()).code, 2);
    write(wrong, "{ not json");
    EXPECT_EQ(run("channel --config " + wrong.string()).code, 2);
}

TEST(Cli, OutFileMatchesStdout) {
    auto path = scratch() / "out.csv";
    auto to_file = run("concat --m1 3 --m2 3 --out " + path.string());
    ASSERT_EQ(to_file.code, 0);
    EXPECT_EQ(to_file.out, "");
    EXPECT_EQ(slurp(path), run("concat --m1 3 --m2 3").out);
}

TEST(Cli, JobsDoNotChangeOutput) {
    for (const std::string args : {"channel --code repetition,ghz --m 1,3,5 --p-grid 0:1:41",
                                   "lifetime --code ghz --m 1,3 --n-grid 2:5 --tol 1e-6",
                                   "negativity --code ghz:5,cluster_ring:5 --p 0.95 --n-grid 2:30",
                                   "concat --m1 1,3,5 --m2 1,3"}) {
        auto a = run(args + " --jobs 1");
        auto b = run(args + " --jobs 8");
        ASSERT_EQ(a.code, 0) << args << a.err;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

}  // namespace
