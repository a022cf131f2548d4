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

#include "gencube/hn_sim.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "gencube/constructions.h"
#include "gencube/separability.h"
#include "gencube/state_spaces.h"
#include "gencube/thresholds.h"

namespace gencube {

namespace {

constexpr uint64_t BLOCK_SHOTS = 4096;

PauliCoeffs2Q noisy_gate_output(const PauliCoeffs2Q &input, const NoiseModel &noise) {
    if (noise.kind == NoiseKind::ErrorPerGate) {
        return error_per_gate_output(input, noise);
    }
    return apply_noise(csign(input), noise);
}

std::array<std::array<uint8_t, 8>, 5> clifford_vertex_table() {
    std::array<std::array<uint8_t, 8>, 5> t{};
    for (int g = 0; g < 5; g++) {
        for (int v = 0; v < 8; v++) {
            t[g][v] = static_cast<uint8_t>(vertex_index(clifford1(cube_vertex(v), static_cast<Clifford1Q>(g))));
        }
    }
    return t;
}

int axis_bit(PauliAxis axis) {
    return axis == PauliAxis::X ? 4 : axis == PauliAxis::Y ? 2 : 1;
}

template <typename Rng>
uint8_t sample_vertex(const BlochOp &state, Rng &rng) {
    std::uniform_real_distribution<double> unit;
    uint8_t v = 0;
    for (int k = 0; k < 3; k++) {
        double p_plus = 0.5 * (1 + state.bloch[k]);
        if (unit(rng) >= p_plus) {
            v |= static_cast<uint8_t>(4 >> k);
        }
    }
    return v;
}

std::string outcome_key(const std::vector<int8_t> &records) {
    std::string s;
    for (auto r : records) {
        s += r > 0 ? '+' : r < 0 ? '-' : '.';
    }
    return s;
}

bool condition_met(const Operation &op, const std::vector<int8_t> &records, const std::vector<int> &slot) {
    return !op.condition || records[slot[op.condition->record]] == op.condition->value;
}

std::vector<int> record_slots(const Circuit &c, size_t &num_records) {
    auto ids = c.record_ids();
    num_records = ids.size();
    std::vector<int> slot(ids.empty() ? 0 : ids.back() + 1, -1);
    for (size_t k = 0; k < ids.size(); k++) {
        slot[ids[k]] = static_cast<int>(k);
    }
    return slot;
}

}  // namespace

HnSimulator::HnSimulator(Circuit circuit) : circuit_(std::move(circuit)) {
    circuit_.validate();
    record_slot_ = record_slots(circuit_, num_records_);
    std::vector<NoiseModel> seen;
    for (const auto &op : circuit_.ops) {
        int gate = -1;
        if (auto *p = std::get_if<PrepareOp>(&op.op)) {
            if (!contains(StateSpaceSpec::cube(1.0), p->state)) {
                throw std::invalid_argument("preparation " + p->state.str() + " lies outside the unit cube");
            }
        } else if (auto *g = std::get_if<CsignOp>(&op.op)) {
            auto it = std::find(seen.begin(), seen.end(), g->noise);
            if (it != seen.end()) {
                gate = static_cast<int>(it - seen.begin());
            } else {
                gate = static_cast<int>(seen.size());
                seen.push_back(g->noise);
                PairTable table{};
                for (int u = 0; u < 8; u++) {
                    for (int v = 0; v < 8; v++) {
                        auto out = noisy_gate_output(product(cube_vertex(u), cube_vertex(v)), g->noise);
                        auto res = cube_separable(out, 1.0);
                        if (!res.feasible()) {
                            throw NotCubeSeparable("csign with " + g->noise.str() +
                                                   " is not cube separable; sampling would be invalid");
                        }
                        auto &cum = table[LhvCertificate::pair_index(u, v)];
                        double total = 0;
                        for (size_t k = 0; k < 64; k++) {
                            total += res.certificate().weights[k];
                            cum[k] = total;
                        }
                        for (auto &c : cum) {
                            c /= total;
                        }
                    }
                }
                gate_tables_.push_back(table);
            }
        }
        op_gate_.push_back(gate);
    }
}

Histogram HnSimulator::sample_block(uint64_t count, uint64_t seed, uint64_t block) const {
    static const auto clif = clifford_vertex_table();
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(block),
                      static_cast<uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit;
    std::uniform_int_distribution<int> coin(0, 1);

    Histogram hist;
    BlochOp initial = BlochOp::from_bloch(0, 0, 1);
    std::vector<uint8_t> vertex(circuit_.num_qubits);
    std::vector<int8_t> records(num_records_);
    for (uint64_t shot = 0; shot < count; shot++) {
        for (auto &v : vertex) {
            v = sample_vertex(initial, rng);
        }
        std::fill(records.begin(), records.end(), 0);
        for (size_t k = 0; k < circuit_.ops.size(); k++) {
            const auto &op = circuit_.ops[k];
            if (!condition_met(op, records, record_slot_)) {
                continue;
            }
            if (auto *p = std::get_if<PrepareOp>(&op.op)) {
                vertex[p->qubit] = sample_vertex(p->state, rng);
            } else if (auto *c = std::get_if<CliffordOp>(&op.op)) {
                vertex[c->qubit] = clif[static_cast<int>(c->gate)][vertex[c->qubit]];
            } else if (auto *g = std::get_if<CsignOp>(&op.op)) {
                const auto &cum = gate_tables_[op_gate_[k]][LhvCertificate::pair_index(vertex[g->q1], vertex[g->q2])];
                double x = unit(rng);
                size_t pick = std::upper_bound(cum.begin(), cum.end(), x) - cum.begin();
                pick = std::min<size_t>(pick, 63);
                vertex[g->q1] = static_cast<uint8_t>(pick / 8);
                vertex[g->q2] = static_cast<uint8_t>(pick % 8);
            } else if (auto *m = std::get_if<MeasureOp>(&op.op)) {
                int bit = axis_bit(m->axis);
                bool negative = vertex[m->qubit] & bit;
                records[record_slot_[m->record]] = negative ? -1 : 1;
                // The qubit is left in the measured eigenstate, whose other components average to zero.
                uint8_t v = negative ? static_cast<uint8_t>(bit) : 0;
                for (int other : {4, 2, 1}) {
                    if (other != bit && coin(rng)) {
                        v |= static_cast<uint8_t>(other);
                    }
                }
                vertex[m->qubit] = v;
            }
        }
        hist[outcome_key(records)]++;
    }
    return hist;
}

Histogram HnSimulator::sample(uint64_t shots, uint64_t seed) const {
    uint64_t blocks = (shots + BLOCK_SHOTS - 1) / BLOCK_SHOTS;
    std::vector<Histogram> parts(blocks);
    std::atomic<uint64_t> next{0};
    auto work = [&]() {
        uint64_t b;
        while ((b = next++) < blocks) {
            uint64_t first = b * BLOCK_SHOTS;
            parts[b] = sample_block(std::min(BLOCK_SHOTS, shots - first), seed, b);
        }
    };
    unsigned n = static_cast<unsigned>(std::min<uint64_t>(worker_count(), std::max<uint64_t>(blocks, 1)));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < n; t++) {
        threads.emplace_back(work);
    }
    work();
    for (auto &t : threads) {
        t.join();
    }
    Histogram total;
    for (const auto &p : parts) {
        for (const auto &[k, v] : p) {
            total[k] += v;
        }
    }
    return total;
}

Histogram simulate_hn(const Circuit &circuit, uint64_t shots, uint64_t seed) {
    return HnSimulator(circuit).sample(shots, seed);
}

namespace {

/// Density-matrix register where qubit q is bit (n - 1 - q) of the basis index.
class DenseRegister {
   public:
    explicit DenseRegister(int n) : n_(n), rho_(size_t{1} << n) {
        rho_(0, 0) = 1;
    }

    size_t bit(int q) const {
        return size_t{1} << (n_ - 1 - q);
    }

    /// rho -> M_q rho M_q^dagger
    void conjugate(int q, const DenseMatrix &M) {
        size_t b = bit(q);
        size_t d = rho_.dim();
        for (size_t i = 0; i < d; i++) {
            if (i & b) {
                continue;
            }
            for (size_t j = 0; j < d; j++) {
                Complex r0 = rho_(i, j), r1 = rho_(i | b, j);
                rho_(i, j) = M(0, 0) * r0 + M(0, 1) * r1;
                rho_(i | b, j) = M(1, 0) * r0 + M(1, 1) * r1;
            }
        }
        for (size_t j = 0; j < d; j++) {
            if (j & b) {
                continue;
            }
            for (size_t i = 0; i < d; i++) {
                Complex c0 = rho_(i, j), c1 = rho_(i, j | b);
                rho_(i, j) = c0 * std::conj(M(0, 0)) + c1 * std::conj(M(0, 1));
                rho_(i, j | b) = c0 * std::conj(M(1, 0)) + c1 * std::conj(M(1, 1));
            }
        }
    }

    void csign(int q1, int q2) {
        size_t mask = bit(q1) | bit(q2);
        size_t d = rho_.dim();
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                bool si = (i & mask) == mask, sj = (j & mask) == mask;
                if (si != sj) {
                    rho_(i, j) = -rho_(i, j);
                }
            }
        }
    }

    /// rho -> (1 - sum w) rho + sum_k w_k P_k rho P_k over Pauli strings on the given qubits.
    void pauli_mixture(const std::vector<std::pair<std::vector<std::pair<int, int>>, double>> &terms) {
        DenseMatrix base = rho_;
        double rest = 1;
        DenseMatrix acc(rho_.dim());
        for (const auto &[paulis, w] : terms) {
            rest -= w;
            rho_ = base;
            for (const auto &[q, p] : paulis) {
                conjugate(q, pauli_matrix(p));
            }
            acc += rho_ * w;
        }
        rho_ = base * rest + acc;
    }

    void reset(int q, const DenseMatrix &sigma) {
        size_t b = bit(q);
        size_t d = rho_.dim();
        DenseMatrix out(d);
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                Complex traced = rho_(i & ~b, j & ~b) + rho_(i | b, j | b);
                out(i, j) = sigma((i & b) ? 1 : 0, (j & b) ? 1 : 0) * traced;
            }
        }
        rho_ = out;
    }

    /// Projects onto the +-1 eigenspace and returns the branch probability.
    double project(int q, PauliAxis axis, int sign) {
        DenseMatrix P = (pauli_matrix(0) + pauli_matrix(static_cast<int>(axis)) * static_cast<double>(sign)) * 0.5;
        conjugate(q, P);
        double p = rho_.trace().real();
        if (p > 0) {
            rho_ = rho_ * (1 / p);
        }
        return p;
    }

    int n_;
    DenseMatrix rho_;
};

void apply_noise_dense(DenseRegister &reg, const CsignOp &g) {
    double p = g.noise.param;
    if (p == 0) {
        return;
    }
    std::vector<std::pair<std::vector<std::pair<int, int>>, double>> terms;
    switch (g.noise.kind) {
        case NoiseKind::JointDepol:
            for (int a = 0; a < 4; a++) {
                for (int b = 0; b < 4; b++) {
                    terms.push_back({{{g.q1, a}, {g.q2, b}}, p / 16});
                }
            }
            reg.pauli_mixture(terms);
            return;
        case NoiseKind::LocalDepol:
            for (int q : {g.q1, g.q2}) {
                terms.clear();
                for (int a = 1; a < 4; a++) {
                    terms.push_back({{{q, a}}, p / 4});
                }
                reg.pauli_mixture(terms);
            }
            return;
        case NoiseKind::LocalDephase:
            for (int q : {g.q1, g.q2}) {
                reg.pauli_mixture({{{{q, 3}}, p}});
            }
            return;
        case NoiseKind::ErrorPerGate:
            reg.pauli_mixture({{{{g.q1, 3}}, p}});
            return;
    }
}

struct DenseRunner {
    const Circuit &circuit;
    std::vector<int> slot;
    Distribution out;

    void run(size_t k, DenseRegister reg, double prob, std::vector<int8_t> records) {
        for (; k < circuit.ops.size(); k++) {
            const auto &op = circuit.ops[k];
            if (!condition_met(op, records, slot)) {
                continue;
            }
            if (auto *p = std::get_if<PrepareOp>(&op.op)) {
                reg.reset(p->qubit, to_dense(p->state));
            } else if (auto *c = std::get_if<CliffordOp>(&op.op)) {
                reg.conjugate(c->qubit, clifford_unitary(c->gate));
            } else if (auto *g = std::get_if<CsignOp>(&op.op)) {
                reg.csign(g->q1, g->q2);
                apply_noise_dense(reg, *g);
            } else if (auto *m = std::get_if<MeasureOp>(&op.op)) {
                DenseRegister minus = reg;
                double p_plus = reg.project(m->qubit, m->axis, 1);
                double p_minus = minus.project(m->qubit, m->axis, -1);
                if (p_minus > 1e-15) {
                    auto rec = records;
                    rec[slot[m->record]] = -1;
                    run(k + 1, std::move(minus), prob * p_minus, std::move(rec));
                }
                if (p_plus <= 1e-15) {
                    return;
                }
                prob *= p_plus;
                records[slot[m->record]] = 1;
            }
        }
        out[outcome_key(records)] += prob;
    }
};

}  // namespace

Distribution simulate_dense(const Circuit &circuit) {
    circuit.validate();
    for (const auto &op : circuit.ops) {
        if (auto *p = std::get_if<PrepareOp>(&op.op)) {
            if (!contains(StateSpaceSpec::sphere(1.0), p->state)) {
                throw std::invalid_argument("preparation " + p->state.str() + " is not a quantum state");
            }
        }
    }
    size_t num_records;
    DenseRunner runner{circuit, record_slots(circuit, num_records), {}};
    runner.run(0, DenseRegister(circuit.num_qubits), 1.0, std::vector<int8_t>(num_records, 0));
    return runner.out;
}

Distribution normalize(const Histogram &histogram) {
    double total = 0;
    for (const auto &[k, v] : histogram) {
        total += static_cast<double>(v);
    }
    Distribution d;
    for (const auto &[k, v] : histogram) {
        d[k] = total > 0 ? static_cast<double>(v) / total : 0;
    }
    return d;
}

double tvd(const Distribution &a, const Distribution &b) {
    double t = 0;
    for (const auto &[k, v] : a) {
        auto it = b.find(k);
        t += std::abs(v - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto &[k, v] : b) {
        if (!a.count(k)) {
            t += std::abs(v);
        }
    }
    return t / 2;
}

void write_histogram_csv(std::ostream &out, const Histogram &histogram) {
    out << "outcome_string,count\n";
    for (const auto &[k, v] : histogram) {
        out << k << "," << v << "\n";
    }
}

}  // namespace gencube
