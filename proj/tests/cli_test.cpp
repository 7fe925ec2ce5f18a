// Copyright 2026 The zxparam Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "zxparam/report.hpp"

namespace zxparam {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "zxparam");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("zxparam_cli_" + std::to_string(rd()));
        fs::create_directories(dir_);
        unsetenv("ZXPARAM_SEED");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(Cli, OptimizeFusion) {
    std::string in = write("fuse.qc", "qreg 1\nrz(t0) 0\nrz(t1) 0\n");
    Outcome r = run({"optimize", in});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_NE(r.out.find("2 -> 1 parameters"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("u0 = t0 + t1"), std::string::npos);
    EXPECT_EQ(slurp(path("fuse.opt.qc")), "qreg 1\nrz(u0) 0\n");
    ReductionMap m = parse_reduction(slurp(path("fuse.opt.map.json")));
    EXPECT_EQ(m.p_matrix, (std::vector<std::vector<int>>{{1, 1}}));
}

TEST_F(Cli, OptimizeCliffordOnlyIsUnchanged) {
    std::string text = "qreg 2\nh 0\ncx 0 1\ns 1\n";
    std::string in = write("cliff.qc", text);
    EXPECT_EQ(run({"optimize", in}).code, cli::kOk);
    EXPECT_EQ(slurp(path("cliff.opt.qc")), text);
}

TEST_F(Cli, OptimizeSeveralInputsIntoOutDir) {
    std::string a = write("a.qc", "qreg 1\nrz(t0) 0\nrz(t1) 0\n");
    std::string b = write("b.qc", "qreg 1\nrz(t0) 0\nh 0\nrz(t1) 0\n");
    fs::create_directories(dir_ / "out");
    Outcome r = run({"optimize", a, b, "--out-dir", path("out")});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(fs::exists(dir_ / "out" / "a.opt.qc"));
    EXPECT_TRUE(fs::exists(dir_ / "out" / "b.opt.map.json"));
    EXPECT_LT(r.out.find("a.qc"), r.out.find("b.qc"));
}

TEST_F(Cli, MalformedInputReportsLine) {
    std::string in = write("bad.qc", "qreg 1\nfoo 0\n");
    Outcome r = run({"optimize", in});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(dir_ / "bad.opt.qc"));
}

TEST_F(Cli, NonCliffordConstant) {
    std::string in = write("t.qc", "qreg 1\nrz(0.25pi) 0\n");
    EXPECT_EQ(run({"optimize", in}).code, cli::kInputError);
}

TEST_F(Cli, MissingFile) {
    EXPECT_EQ(run({"optimize", path("nope.qc")}).code, cli::kInputError);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
    std::string in = write("fuse.qc", "qreg 1\nrz(t0) 0\nrz(t1) 0\n");
    EXPECT_EQ(run({"oracle", in, "--samples", "1"}).code, cli::kInputError);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(Cli, VerifyAcceptsOptimizerOutput) {
    std::string in = write("cx.qc", "qreg 2\nrz(t0) 0\ncx 0 1\nrz(t1) 0\ncx 0 1\n");
    ASSERT_EQ(run({"optimize", in}).code, cli::kOk);
    Outcome r = run({"verify", in, path("cx.opt.qc"), path("cx.opt.map.json")});
    EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("proportionality: holds"), std::string::npos);
    EXPECT_NE(r.out.find("certificate: passes"), std::string::npos);
}

TEST_F(Cli, VerifyRejectsFlippedSign) {
    std::string in = write("fuse.qc", "qreg 1\nrz(t0) 0\nrz(t1) 0\n");
    ASSERT_EQ(run({"optimize", in}).code, cli::kOk);
    std::string map = slurp(path("fuse.opt.map.json"));
    ReductionMap m = parse_reduction(map);
    m.p_matrix[0][1] = -1;
    std::string flipped = write("flipped.json", dump_reduction(m));
    Outcome r = run({"verify", in, path("fuse.opt.qc"), flipped});
    EXPECT_EQ(r.code, cli::kVerificationFailed);
    EXPECT_NE(r.out.find("FAILS"), std::string::npos);
    EXPECT_NE(r.out.find("first failing sample"), std::string::npos);
}

TEST_F(Cli, VerifyRejectsUnoptimisedCircuit) {
    std::string in = write("fuse.qc", "qreg 1\nrz(t0) 0\nrz(t1) 0\n");
    std::string id = write("id.json", dump_reduction(ReductionMap::identity({"t0", "t1"})));
    Outcome r = run({"verify", in, in, id});
    EXPECT_EQ(r.code, cli::kVerificationFailed);
    EXPECT_NE(r.out.find("simplifies further"), std::string::npos);
}

TEST_F(Cli, VerifyMismatchedQubits) {
    std::string a = write("a.qc", "qreg 1\nrz(t0) 0\n");
    std::string b = write("b.qc", "qreg 2\nrz(t0) 0\n");
    std::string id = write("id.json", dump_reduction(ReductionMap::identity({"t0"})));
    EXPECT_EQ(run({"verify", a, b, id}).code, cli::kInputError);
}

TEST_F(Cli, VerifyMalformedMap) {
    std::string a = write("a.qc", "qreg 1\nrz(t0) 0\n");
    std::string m = write("m.json", "{\"params_in\": 3}");
    EXPECT_EQ(run({"verify", a, a, m}).code, cli::kInputError);
}

TEST_F(Cli, OracleCounts) {
    struct Case {
        const char* text;
        const char* expected;
    };
    for (const Case& k : {Case{"qreg 1\nrz(t0) 0\nrz(t1) 0\n", "min = 1"},
                          Case{"qreg 1\nrz(t0) 0\nh 0\nrz(t1) 0\n", "min = 2"},
                          Case{"qreg 1\nh 0\n", "min = 0"}}) {
        std::string in = write("o.qc", k.text);
        Outcome r = run({"oracle", in});
        EXPECT_EQ(r.code, cli::kOk) << r.err;
        EXPECT_NE(r.out.find(k.expected), std::string::npos) << r.out;
    }
}

TEST_F(Cli, OracleTooManyParams) {
    std::string in = write("big.qc", "qreg 1\nrz(a) 0\nh 0\nrz(b) 0\nh 0\nrz(c) 0\n");
    EXPECT_EQ(run({"oracle", in, "--oracle-max-params", "2"}).code, cli::kInputError);
}

TEST_F(Cli, ReportsAreDeterministic) {
    std::string in = write("cx.qc", "qreg 2\nrz(t0) 0\ncx 0 1\nrz(t1) 0\ncx 0 1\n");
    ASSERT_EQ(run({"optimize", in}).code, cli::kOk);
    std::vector<std::string> args{"verify", in, path("cx.opt.qc"), path("cx.opt.map.json"), "--seed", "7"};
    auto with_report = [&](const std::string& name) {
        auto a = args;
        a.push_back("--report");
        a.push_back(path(name));
        EXPECT_EQ(run(a).code, cli::kOk);
        return slurp(path(name));
    };
    std::string r1 = with_report("r1.json");
    std::string r2 = with_report("r2.json");
    EXPECT_FALSE(r1.empty());
    EXPECT_EQ(r1, r2);

    setenv("ZXPARAM_SEED", "7", 1);
    Outcome r = run({"verify", in, path("cx.opt.qc"), path("cx.opt.map.json"), "--report", path("r3.json")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(slurp(path("r3.json")), r1);

    setenv("ZXPARAM_SEED", "8", 1);
    run({"verify", in, path("cx.opt.qc"), path("cx.opt.map.json"), "--report", path("r4.json")});
    EXPECT_NE(slurp(path("r4.json")), r1);

    setenv("ZXPARAM_SEED", "banana", 1);
    EXPECT_EQ(run({"oracle", in}).code, cli::kInputError);
    unsetenv("ZXPARAM_SEED");
}

}  // namespace
}  // namespace zxparam
