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

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gencube/constructions.h"
#include "gencube/hn_sim.h"
#include "gencube/separability.h"
#include "gencube/thresholds.h"

namespace gencube {

namespace {

struct Checker {
    std::ostream &out;
    bool ok = true;

    void check(bool pass, const std::string &item, const std::string &detail) {
        out << (pass ? "PASS " : "FAIL ") << item << ": " << detail << "\n";
        ok &= pass;
    }
};

std::string fmt(double x, int precision = 6) {
    std::stringstream ss;
    ss << std::setprecision(precision) << x;
    return ss.str();
}

void print_tolerances(std::ostream &out) {
    out << "# tolerances: lp_feasibility=" << FEASIBILITY_TOL << " psd=" << PSD_TOL
        << " bisection=1e-07 exact_fallback_denominator=1e6\n";
}

void verify_appendix1(Checker &c) {
    for (const auto &e : appendix1_certificates()) {
        bool pass = e.valid && verify_certificate(e.certificate, e.target, 1.0, 1e-12);
        c.check(pass, "appendix1 item " + std::to_string(e.item) + " (" + e.title + ")",
                "residual " + fmt(certificate_residual(e.certificate, e.target)));
    }
    auto entries = appendix1_certificates();
    double q = std::sqrt(2.0) - 1;
    double d4 = entries[3].target.max_abs_diff(pipeline(cube_vertex(0), cube_vertex(0), 1, NoiseModel(NoiseKind::JointDepol, 2.0 / 3)));
    double d6 = entries[6].target.max_abs_diff(
        pipeline(cube_vertex(0), cube_vertex(0), 1, NoiseModel(NoiseKind::LocalDephase, (1 - q) / 2)));
    double d7 = entries[7].target.max_abs_diff(pipeline(cube_vertex(0), cube_vertex(0), 1, NoiseModel(NoiseKind::LocalDepol, 1 - q)));
    c.check(d4 < 1e-12, "appendix1 item 4 target", "matches the joint-depolarized gate output, diff " + fmt(d4));
    c.check(d6 < 1e-12, "appendix1 item 6 target", "matches the dephased gate output, diff " + fmt(d6));
    c.check(d7 < 1e-12, "appendix1 item 7 target", "matches the locally depolarized gate output, diff " + fmt(d7));
    auto below6 = appendix1_certificates(0.25, 2 - std::sqrt(2.0))[6];
    auto below7 = appendix1_certificates(1 - 1 / std::sqrt(2.0), 0.5)[7];
    c.check(!below6.valid && !verify_certificate(below6.certificate, below6.target, 1, 1e-9), "appendix1 item 6 below threshold",
            "flagged invalid: " + below6.reason);
    c.check(!below7.valid && !verify_certificate(below7.certificate, below7.target, 1, 1e-9), "appendix1 item 7 below threshold",
            "flagged invalid: " + below7.reason);
}

void verify_appendix2(Checker &c) {
    auto r = appendix2_checks();
    c.check(std::abs(r.stated_probability + 0.5) < 1e-15, "appendix2 stated vertices", "probability " + fmt(r.stated_probability));
    c.check(r.outside_witnessed == r.outside_samples, "appendix2 outside the sphere",
            std::to_string(r.outside_witnessed) + "/" + std::to_string(r.outside_samples) + " negative witnesses");
    c.check(r.inside_violations == 0, "appendix2 inside the sphere",
            std::to_string(r.inside_violations) + " violations, min probability " + fmt(r.worst_inside_value));
}

void verify_appendix3(Checker &c) {
    for (auto [family, param] : std::vector<std::pair<NoiseKind, double>>{
             {NoiseKind::JointDepol, 0.4}, {NoiseKind::LocalDepol, 0.3}, {NoiseKind::LocalDephase, 0.2}}) {
        double d = sphere_symmetry_deviation(family, 1.3, param, 200);
        c.check(d < 1e-12, "appendix3 " + noise_kind_name(family), "max deviation " + fmt(d));
    }
}

void verify_bell(Checker &c) {
    const char *names[] = {"phi+", "phi-", "psi+", "psi-"};
    for (int k = 0; k < 4; k++) {
        auto s = static_cast<BellState>(k);
        bool pass = verify_certificate(bell_cube_certificate(s), bell_coefficients(s), 1.0, 1e-12) &&
                    !quantum_separable_2q(bell_coefficients(s));
        c.check(pass, std::string("bell ") + names[k], "uniform 8-pair certificate, entangled as a quantum state");
    }
}

void verify_lemma8(Checker &c) {
    auto search = lemma8_search();
    const auto &r = search.best;
    std::stringstream ss;
    write_report(ss, r);
    std::string line;
    while (std::getline(ss, line)) {
        c.out << "# " << line << "\n";
    }
    c.check(r.all_feasible(), "lemma8 cube separable outputs", std::to_string(r.feasible_outputs) + "/64 feasible");
    c.check(r.non_ppt_witness < -1e-8, "lemma8 entangling witness", fmt(r.non_ppt_witness));
    c.check(r.cj_min_pt_io_split < -1e-8, "lemma8 choi state input:output split", fmt(r.cj_min_pt_io_split));
    c.check(r.cj_min_pt_ab_split < -1e-8, "lemma8 choi state A:B split", fmt(r.cj_min_pt_ab_split));
    c.check(r.marginal_deviation <= 1e-10, "lemma8 input marginal", fmt(r.marginal_deviation));
    c.check(search.found, "lemma8 parameter search", std::to_string(search.tried.size()) + " parameter pairs tried");
}

void verify_epg(Checker &c) {
    auto b = error_per_gate_bounds();
    c.check(std::abs(b.lower - 0.2) < 1e-12, "epg lower bound", fmt(b.lower));
    c.check(b.magic_identity_residual < 1e-12, "epg magic identity", "residual " + fmt(b.magic_identity_residual));
    c.check(b.w_identity_residual < 1e-12, "epg weight identity", "residual " + fmt(b.w_identity_residual));
    c.check(b.upper_feasible_outputs == 64, "epg upper bound", std::to_string(b.upper_feasible_outputs) + "/64 feasible at 1/2");
}

void verify_orbit(Checker &c) {
    auto cycle = clifford_vertex_cycle();
    std::set<int> seen;
    std::string path;
    for (const auto &v : cycle) {
        seen.insert(vertex_index(v));
        path += v.str() + " ";
    }
    c.check(cycle.size() == 8 && seen.size() == 8, "orbit", path);
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cube separability of noisy two-qubit gates"};
    app.require_subcommand(1);
    app.fallthrough();
    int precision = 6;
    app.add_option("--precision", precision, "Digits after the decimal point")->check(CLI::Range(0, 17));

    std::map<std::string, NoiseKind> noise_names{
        {"joint-depol", NoiseKind::JointDepol}, {"local-depol", NoiseKind::LocalDepol}, {"local-dephase", NoiseKind::LocalDephase}};
    std::map<std::string, SpaceKind> space_names{{"cube", SpaceKind::Cube}, {"sphere", SpaceKind::Sphere}};
    std::map<std::string, Criterion> criterion_names{{"cube-separable", Criterion::CubeSeparable},
                                                     {"quantum-separable", Criterion::QuantumSeparable},
                                                     {"pauli-positive", Criterion::PauliPositive}};
    std::map<std::string, InputPolicy> policy_names{{"worst-vertex", InputPolicy::WorstVertex},
                                                    {"all-vertices", InputPolicy::AllVertices},
                                                    {"sphere-grid", InputPolicy::SphereGrid}};

    NoiseKind family = NoiseKind::JointDepol;
    SpaceKind space = SpaceKind::Cube;
    double R = 1.0;
    std::optional<Criterion> criterion;
    std::optional<InputPolicy> policy;
    int grid = 60;
    auto add_query_options = [&](CLI::App *sub) {
        sub->add_option("--noise", family, "Noise family")->required()->transform(CLI::CheckedTransformer(noise_names));
        sub->add_option("--space", space, "State space")->transform(CLI::CheckedTransformer(space_names));
        sub->add_option("--criterion", criterion, "Criterion")->transform(CLI::CheckedTransformer(criterion_names));
        sub->add_option("--policy", policy, "Input policy")->transform(CLI::CheckedTransformer(policy_names));
        sub->add_option("--grid", grid, "Sphere grid points per axis")->check(CLI::Range(2, 2000));
    };

    auto *threshold = app.add_subcommand("threshold", "Minimal noise making the gate output satisfy the criterion");
    add_query_options(threshold);
    threshold->add_option("--R", R, "Rescaling factor")->check(CLI::PositiveNumber);

    double r_min = 0.5, r_max = 1.5;
    int steps = 11;
    std::string curve_out;
    auto *curve_cmd = app.add_subcommand("curve", "Threshold as a function of R");
    add_query_options(curve_cmd);
    curve_cmd->add_option("--r-min", r_min)->check(CLI::PositiveNumber);
    curve_cmd->add_option("--r-max", r_max)->check(CLI::PositiveNumber);
    curve_cmd->add_option("--steps", steps)->check(CLI::Range(1, 100000));
    curve_cmd->add_option("--out", curve_out, "CSV output file");

    std::string target;
    auto *verify = app.add_subcommand("verify", "Run a named set of checks");
    verify->add_option("target", target)
        ->required()
        ->check(CLI::IsMember({"appendix1", "appendix2", "appendix3", "bell", "lemma8", "epg-bounds", "orbit"}));

    std::string circuit_path, sim_out;
    uint64_t shots = 100000, seed = 1;
    bool compare_dense = false;
    auto *simulate = app.add_subcommand("simulate", "Sample a circuit by vertex tracking");
    simulate->add_option("--circuit", circuit_path)->required();
    simulate->add_option("--shots", shots);
    simulate->add_option("--seed", seed);
    simulate->add_flag("--compare-dense", compare_dense, "Also report the distance to the exact distribution");
    simulate->add_option("--out", sim_out, "CSV output file");

    std::string povm_path;
    auto *compat = app.add_subcommand("compat", "Operator compatibility of a POVM set");
    compat->add_option("--povms", povm_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    auto build_query = [&]() {
        ThresholdQuery q;
        q.family = family;
        q.space = StateSpaceSpec(space, R);
        q.criterion = criterion.value_or(space == SpaceKind::Cube ? Criterion::CubeSeparable : Criterion::QuantumSeparable);
        q.policy = policy.value_or(space == SpaceKind::Cube ? InputPolicy::WorstVertex : InputPolicy::SphereGrid);
        q.grid_n = grid;
        return q;
    };

    try {
        if (*threshold) {
            print_tolerances(out);
            auto r = min_noise_detailed(build_query());
            if (space == SpaceKind::Sphere) {
                out << "# arg max u=" << r.arg_u.str() << " v=" << r.arg_v.str() << "\n";
            }
            out << std::fixed << std::setprecision(precision) << r.lambda_star << "\n";
            return 0;
        }
        if (*curve_cmd) {
            auto points = curve(build_query(), r_min, r_max, steps);
            if (curve_out.empty()) {
                print_tolerances(err);
                write_curve_csv(out, points);
            } else {
                std::ofstream f(curve_out);
                if (!f) {
                    throw std::runtime_error("cannot write " + curve_out);
                }
                write_curve_csv(f, points);
                print_tolerances(out);
                out << "wrote " << points.size() << " points to " << curve_out << "\n";
            }
            for (const auto &p : points) {
                if (!p.error.empty()) {
                    err << "gap at R=" << p.R << ": " << p.error << "\n";
                }
            }
            return 0;
        }
        if (*verify) {
            print_tolerances(out);
            Checker c{out};
            if (target == "appendix1") {
                verify_appendix1(c);
            } else if (target == "appendix2") {
                verify_appendix2(c);
            } else if (target == "appendix3") {
                verify_appendix3(c);
            } else if (target == "bell") {
                verify_bell(c);
            } else if (target == "lemma8") {
                verify_lemma8(c);
            } else if (target == "epg-bounds") {
                verify_epg(c);
            } else {
                verify_orbit(c);
            }
            return c.ok ? 0 : 1;
        }
        if (*simulate) {
            std::ifstream f(circuit_path);
            if (!f) {
                throw std::runtime_error("cannot read " + circuit_path);
            }
            Circuit circuit = parse_circuit(f);
            Histogram hist = simulate_hn(circuit, shots, seed);
            std::ofstream file;
            if (!sim_out.empty()) {
                file.open(sim_out);
                if (!file) {
                    throw std::runtime_error("cannot write " + sim_out);
                }
            }
            std::ostream &dst = sim_out.empty() ? out : file;
            std::ostream &notes = sim_out.empty() ? err : out;
            print_tolerances(notes);
            notes << "# rng mt19937_64 seed=" << seed << " block=4096\n";
            write_histogram_csv(dst, hist);
            if (!sim_out.empty()) {
                out << "wrote " << hist.size() << " outcomes to " << sim_out << "\n";
            }
            if (compare_dense) {
                notes << "# tvd_vs_dense " << std::fixed << std::setprecision(precision)
                    << tvd(normalize(hist), simulate_dense(circuit)) << "\n";
            }
            return 0;
        }
        if (*compat) {
            std::ifstream f(povm_path);
            if (!f) {
                throw std::runtime_error("cannot read " + povm_path);
            }
            auto r = operator_compatible(parse_povm_set(f));
            print_tolerances(out);
            out << "compatible: " << (r.compatible ? "true" : "false") << "\n";
            out << "counting_bound: " << (r.counting_bound_ok ? "pass" : "fail") << "\n";
            out << "worst_residual: " << std::scientific << std::setprecision(3) << r.worst_residual << "\n";
            out << std::fixed << std::setprecision(precision);
            for (const auto &corner : r.corners) {
                if (corner.dim() == 2) {
                    auto b = bloch_from_dense(corner);
                    out << "corner " << b.bloch[0] << " " << b.bloch[1] << " " << b.bloch[2] << "\n";
                } else {
                    out << "corner\n" << corner.str();
                }
            }
            return 0;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace gencube
