// Copyright 2026 The weylgate Authors
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

#include "weylgate/cli.h"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

using namespace weylgate;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const CliHooks &hooks = {}) {
    args.insert(args.begin(), "weylgate");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &leaf) {
    return ::testing::TempDir() + leaf;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Flips the sign of the second term in z1.
ZCoefficients flipped_engine(const CanonicalPoint &c) {
    ZCoefficients z = z_from_point(c);
    const cplx ep = std::polar(1.0, c.c1 / 2.0);
    const cplx em = std::polar(1.0, -c.c1 / 2.0);
    z.z[0] = 0.5 * (ep * std::cos((c.c3 - c.c2) / 2) - em * std::cos((c.c3 + c.c2) / 2));
    return z;
}

}  // namespace

TEST(cli, analyze_cnot_text) {
    const CliRun r = run({"analyze", "cnot"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("[1.570796, 0.000000, 0.000000] rad"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("Schmidt coefficients: 0.707107 0.707107 0.000000 0.000000"), std::string::npos);
    EXPECT_NE(r.out.find("Schmidt number:       2"), std::string::npos);
    EXPECT_NE(r.out.find("Schmidt strength:     1.000000"), std::string::npos);
    EXPECT_NE(r.out.find("perfect entangler:    yes"), std::string::npos);
}

TEST(cli, analyze_degrees) {
    const CliRun r = run({"analyze", "swap", "--degrees"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("[90.000000, 90.000000, 90.000000] deg"), std::string::npos) << r.out;
}

TEST(cli, analyze_json) {
    const CliRun r = run({"analyze", "swap", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("gate"), "swap");
    EXPECT_NEAR(j.at("canonical_point")[2].get<double>(), kPi / 2, 1e-14);
    EXPECT_NEAR(j.at("g1").at("re").get<double>(), -1.0, 1e-14);
    EXPECT_NEAR(j.at("g2").get<double>(), -3.0, 1e-14);
    EXPECT_NEAR(j.at("schmidt_strength").get<double>(), 2.0, 1e-14);
    EXPECT_EQ(j.at("schmidt_number"), 4);
    EXPECT_EQ(j.at("perfect_entangler"), false);
    EXPECT_EQ(j.at("controlled_unitary"), false);
}

TEST(cli, analyze_identity) {
    const CliRun r = run({"analyze", "identity", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schmidt_number"), 1);
    EXPECT_NEAR(j.at("schmidt_strength").get<double>(), 0.0, 1e-12);
    EXPECT_EQ(j.at("perfect_entangler"), false);
}

TEST(cli, analyze_file_and_errors) {
    const std::string good = temp_path("cli_gate.json");
    std::ofstream(good) << gate_to_json(catalog("iswap")).dump();
    const CliRun ok = run({"analyze", good, "--format", "json"});
    ASSERT_EQ(ok.code, kExitOk) << ok.err;
    EXPECT_EQ(nlohmann::json::parse(ok.out).at("perfect_entangler"), true);

    EXPECT_EQ(run({"analyze", "no_such_gate"}).code, kExitParse);
    const std::string bad = temp_path("cli_bad.json");
    std::ofstream(bad) << "[[1,2],";
    EXPECT_EQ(run({"analyze", bad}).code, kExitParse);

    const std::string nonunitary = temp_path("cli_nonunitary.json");
    nlohmann::json j = gate_to_json(catalog("cnot"));
    j["matrix"][0][0] = {2.0, 0.0};
    std::ofstream(nonunitary) << j.dump();
    const CliRun v = run({"analyze", nonunitary});
    EXPECT_EQ(v.code, kExitValidation);
    EXPECT_NE(v.err.find("not unitary"), std::string::npos);

    EXPECT_EQ(run({"analyze", "cnot", "--format", "xml"}).code, kExitParse);
    EXPECT_EQ(run({}).code, kExitParse);
    EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
}

TEST(cli, sweep_to_stdout_and_files) {
    const CliRun r = run({"sweep", "A2A3", "--n", "11"});
    ASSERT_EQ(r.code, kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        rows++;
        EXPECT_NE(line.find(",2.000000000000000,"), std::string::npos) << line;
    }
    EXPECT_EQ(rows, 11);

    const std::string csv = temp_path("cli_sweep.csv");
    const CliRun f = run({"sweep", "PN", "--n", "101", "--out", csv, "--svg"});
    ASSERT_EQ(f.code, kExitOk) << f.err;
    EXPECT_NE(f.out.find("strength min"), std::string::npos);
    EXPECT_EQ(slurp(csv).substr(0, 6), "param,");
    const std::string svg = slurp(temp_path("cli_sweep.svg"));
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("polyline"), std::string::npos);

    EXPECT_EQ(run({"sweep", "XY"}).code, kExitParse);
    EXPECT_EQ(run({"sweep", "PN", "--n", "1"}).code, kExitParse);
}

TEST(cli, sweep_io_failure) {
    const CliRun r = run({"sweep", "OA1", "--out", "/nonexistent_dir/x.csv"});
    EXPECT_EQ(r.code, kExitIo);
}

TEST(cli, figure) {
    const std::string csv = temp_path("cli_fig4a.csv");
    const CliRun r = run({"figure", "fig4a", "--n", "21", "--out", csv, "--svg"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(slurp(csv).substr(0, 18), "param,A2Q,A2M,A2P\n");
    EXPECT_TRUE(std::filesystem::exists(temp_path("cli_fig4a.svg")));
    EXPECT_EQ(run({"figure", "fig9"}).code, kExitParse);
}

TEST(cli, verify_tables) {
    const CliRun r = run({"verify-tables", "--n", "97"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("PASS, 15 edges"), std::string::npos);
    EXPECT_EQ(run({"verify-tables", "--n", "2"}).code, kExitOk);
}

TEST(cli, verify_tables_fault_injection) {
    CliHooks hooks;
    hooks.z_engine = flipped_engine;
    const CliRun r = run({"verify-tables", "--n", "97"}, hooks);
    EXPECT_EQ(r.code, kExitTableMismatch);
    EXPECT_NE(r.err.find("mismatch on edge"), std::string::npos);
}

TEST(cli, audit_pass_and_determinism) {
    const CliRun a = run({"audit", "--samples", "300", "--seed", "42"});
    const CliRun b = run({"audit", "--samples", "300", "--seed", "42"});
    EXPECT_EQ(a.code, kExitOk) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("Schmidt numbers: 1:0 2:0 3:0 4:300"), std::string::npos) << a.out;
    EXPECT_NE(run({"audit", "--samples", "300", "--seed", "43"}).out, a.out);
    EXPECT_EQ(run({"audit", "--samples", "1", "--seed", "7"}).code, kExitOk);
}

TEST(cli, audit_requires_seed) {
    EXPECT_EQ(run({"audit", "--samples", "10"}).code, kExitParse);
    EXPECT_EQ(run({"audit", "--samples", "0", "--seed", "1"}).code, kExitParse);
}

TEST(cli, audit_controlled_unitary_line) {
    const CliRun r = run({"audit", "--samples", "200", "--seed", "5", "--family", "cu-line"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("Schmidt numbers: 1:0 2:200 3:0 4:0"), std::string::npos) << r.out;
}

TEST(cli, audit_failure_writes_reanalyzable_counterexample) {
    CliHooks hooks;
    hooks.z_engine = flipped_engine;
    const std::string path = temp_path("cli_counterexample.json");
    const CliRun r = run({"audit", "--samples", "20", "--seed", "3", "--counterexample-out", path}, hooks);
    EXPECT_EQ(r.code, kExitAuditFailure);
    EXPECT_NE(r.out.find("counterexample:"), std::string::npos);
    EXPECT_NE(r.out.find("violation:"), std::string::npos);
    const CliRun again = run({"analyze", path, "--format", "json"});
    EXPECT_EQ(again.code, kExitOk) << again.err;
}

TEST(cli, list_gates) {
    const CliRun r = run({"list-gates"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("gates: identity cnot cz swap dcnot iswap sqrt_swap sqrt_iswap"), std::string::npos);
    EXPECT_NE(r.out.find("PN"), std::string::npos);
}

TEST(cli, help_exits_zero) {
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli, executable_output_is_byte_identical) {
    const char *tool = std::getenv("WEYLGATE_TOOL");
    if (tool == nullptr) {
        GTEST_SKIP() << "WEYLGATE_TOOL not set";
    }
    auto capture = [&](const std::string &cmd) {
        std::string out;
        std::unique_ptr<FILE, int (*)(FILE *)> p(popen(cmd.c_str(), "r"), pclose);
        std::array<char, 4096> buf{};
        std::size_t n;
        while ((n = std::fread(buf.data(), 1, buf.size(), p.get())) > 0) {
            out.append(buf.data(), n);
        }
        return out;
    };
    const std::string cmd = std::string(tool) + " audit --samples 200 --seed 42";
    const std::string a = capture(cmd);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, capture(cmd));
    const std::string sweep_cmd = std::string(tool) + " sweep OA2 --n 33";
    EXPECT_EQ(capture(sweep_cmd), capture(sweep_cmd));
}
