// Copyright 2026 The gencube Authors
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

#include "gencube/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gencube;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "gencube");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        r.push_back(line);
    }
    return r;
}

std::string data(const std::string &rel) {
    return std::string(GENCUBE_TEST_DATA_DIR) + "/" + rel;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("gencube_cli_" + name)).string();
}

}  // namespace

TEST(cli, threshold_joint_depol_cube) {
    auto r = run({"threshold", "--noise", "joint-depol", "--space", "cube", "--R", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    ASSERT_EQ(ls[0].rfind("# tolerances:", 0), 0u);
    ASSERT_EQ(ls[1], "0.666667");
}

TEST(cli, precision_option) {
    auto r = run({"threshold", "--noise", "local-dephase", "--precision", "9"});
    ASSERT_EQ(r.code, 0) << r.err;
    double v = std::stod(lines(r.out).back());
    ASSERT_NEAR(v, 1 - 1 / std::sqrt(2.0), 1e-6);
    ASSERT_EQ(lines(r.out).back().size(), 11u);
}

TEST(cli, threshold_sphere_reports_arg_max) {
    auto r = run({"threshold", "--noise", "joint-depol", "--space", "sphere", "--R", "1.73"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_NE(r.out.find("# arg max"), std::string::npos);
    ASSERT_NEAR(std::stod(lines(r.out).back()), 0.536, 0.005);
}

TEST(cli, verify_targets_pass) {
    for (const char *target : {"appendix1", "appendix2", "appendix3", "bell", "epg-bounds", "orbit"}) {
        auto r = run({"verify", target});
        ASSERT_EQ(r.code, 0) << target << "\n" << r.out;
        ASSERT_EQ(r.out.find("FAIL"), std::string::npos) << target;
        ASSERT_NE(r.out.find("PASS"), std::string::npos) << target;
    }
}

TEST(cli, verify_certificates_cover_all_items) {
    auto r = run({"verify", "appendix1"});
    for (int item = 1; item <= 7; item++) {
        ASSERT_NE(r.out.find("PASS appendix1 item " + std::to_string(item) + " ("), std::string::npos) << item;
    }
}

TEST(cli, verify_entangling_channel_reports) {
    auto r = run({"verify", "lemma8"});
    ASSERT_NE(r.out.find("# alpha:"), std::string::npos);
    ASSERT_NE(r.out.find("lemma8 entangling witness"), std::string::npos);
    ASSERT_EQ(r.code, r.out.find("FAIL") == std::string::npos ? 0 : 1);
}

TEST(cli, curve_csv_to_file) {
    auto path = temp_path("curve.csv");
    auto r = run({"curve", "--noise", "joint-depol", "--space", "cube", "--r-min", "0.5", "--r-max", "1.5", "--steps", "50",
                  "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    auto ls = lines(ss.str());
    ASSERT_EQ(ls.size(), 51u);
    ASSERT_EQ(ls[0], "R,lambda_star,method");
    double target_R = 1 / std::sqrt(2.0);
    double best_gap = INFINITY, lam_at = 0, R_at = 0;
    for (size_t k = 1; k < ls.size(); k++) {
        double R = std::stod(ls[k]);
        double lam = std::stod(ls[k].substr(ls[k].find(',') + 1));
        if (std::abs(R - target_R) < best_gap) {
            best_gap = std::abs(R - target_R);
            lam_at = lam;
            R_at = R;
        }
    }
    ASSERT_LT(best_gap, 0.011);
    ASSERT_NEAR(lam_at, 0.5858, 0.01) << "R=" << R_at;
    std::remove(path.c_str());
}

TEST(cli, curve_csv_to_stdout) {
    auto r = run({"curve", "--noise", "local-depol", "--r-min", "1", "--r-max", "2", "--steps", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    ASSERT_EQ(ls[0], "R,lambda_star,method");
    ASSERT_EQ(ls[1].substr(0, 2), "1,");
    ASSERT_NE(r.err.find("# tolerances"), std::string::npos);
}

TEST(cli, simulate_deterministic) {
    auto circ = data("circuits/three_qubit_chain.circ");
    auto a = run({"simulate", "--circuit", circ, "--shots", "20000", "--seed", "12"});
    auto b = run({"simulate", "--circuit", circ, "--shots", "20000", "--seed", "12"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(a.out, b.out);
    ASSERT_EQ(lines(a.out)[0], "outcome_string,count");
    ASSERT_NE(a.err.find("seed=12"), std::string::npos);
    auto c = run({"simulate", "--circuit", circ, "--shots", "20000", "--seed", "13"});
    ASSERT_NE(a.out, c.out);
}

TEST(cli, simulate_compare_dense) {
    auto r = run({"simulate", "--circuit", data("circuits/bell_local_depol.circ"), "--shots", "100000", "--compare-dense"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto pos = r.err.find("# tvd_vs_dense ");
    ASSERT_NE(pos, std::string::npos);
    ASSERT_LT(std::stod(r.err.substr(pos + 15)), 0.02);
}

TEST(cli, simulate_rejects_entangling_circuit) {
    auto path = temp_path("bad.circ");
    {
        std::ofstream f(path);
        f << "qubits 2\nprep 0 1 0 0\nprep 1 1 0 0\ncsign 0 1 joint-depol 0.2\nmeas 0 X 0\n";
    }
    auto r = run({"simulate", "--circuit", path});
    ASSERT_EQ(r.code, 1);
    ASSERT_NE(r.err.find("error:"), std::string::npos);
    std::remove(path.c_str());
}

TEST(cli, compat) {
    auto r = run({"compat", "--povms", data("povms/pauli_xyz.povm")});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_NE(r.out.find("compatible: true"), std::string::npos);
    ASSERT_NE(r.out.find("corner 1.000000 1.000000 1.000000"), std::string::npos);
    auto t = run({"compat", "--povms", data("povms/trine_xz.povm")});
    ASSERT_EQ(t.code, 0) << t.err;
    ASSERT_NE(t.out.find("compatible: false"), std::string::npos);
}

TEST(cli, usage_errors_exit_2) {
    ASSERT_EQ(run({}).code, 2);
    ASSERT_EQ(run({"bogus"}).code, 2);
    ASSERT_EQ(run({"threshold"}).code, 2);
    ASSERT_EQ(run({"threshold", "--noise", "nope"}).code, 2);
    ASSERT_EQ(run({"threshold", "--noise", "joint-depol", "--R", "-1"}).code, 2);
    ASSERT_EQ(run({"threshold", "--noise", "joint-depol", "--unknown"}).code, 2);
    ASSERT_EQ(run({"verify", "appendix9"}).code, 2);
}

TEST(cli, runtime_errors_exit_1) {
    ASSERT_EQ(run({"compat", "--povms", "/nonexistent/file"}).code, 1);
    auto r = run({"threshold", "--noise", "joint-depol", "--space", "sphere", "--policy", "worst-vertex"});
    ASSERT_EQ(r.code, 1);
    ASSERT_NE(r.err.find("error:"), std::string::npos);
}

TEST(cli, help_exits_0) {
    auto r = run({"--help"});
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("threshold"), std::string::npos);
}
