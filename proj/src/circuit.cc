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

#include "gencube/circuit.h"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace gencube {

static PauliAxis parse_axis(const std::string &s) {
    if (s == "X") {
        return PauliAxis::X;
    }
    if (s == "Y") {
        return PauliAxis::Y;
    }
    if (s == "Z") {
        return PauliAxis::Z;
    }
    throw std::invalid_argument("measurement axis must be X, Y or Z, got '" + s + "'");
}

void Circuit::validate() const {
    if (num_qubits < 1 || num_qubits > MAX_CIRCUIT_QUBITS) {
        throw std::invalid_argument("circuit must have 1 to 8 qubits");
    }
    auto check_q = [&](int q) {
        if (q < 0 || q >= num_qubits) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        }
    };
    std::set<int> written;
    for (const auto &op : ops) {
        if (op.condition) {
            if (!written.count(op.condition->record)) {
                throw std::invalid_argument("condition on record " + std::to_string(op.condition->record) +
                                            " before it is measured");
            }
            if (op.condition->value != 1 && op.condition->value != -1) {
                throw std::invalid_argument("condition value must be +1 or -1");
            }
        }
        std::visit(
            [&](const auto &o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, CsignOp>) {
                    check_q(o.q1);
                    check_q(o.q2);
                    if (o.q1 == o.q2) {
                        throw std::invalid_argument("csign needs two distinct qubits");
                    }
                    NoiseModel check(o.noise.kind, o.noise.param, o.noise.adversary);
                    (void)check;
                } else if constexpr (std::is_same_v<T, MeasureOp>) {
                    check_q(o.qubit);
                    if (o.record < 0) {
                        throw std::invalid_argument("record ids must be nonnegative");
                    }
                    if (!written.insert(o.record).second) {
                        throw std::invalid_argument("record " + std::to_string(o.record) + " written twice");
                    }
                } else {
                    check_q(o.qubit);
                }
            },
            op.op);
    }
}

std::vector<int> Circuit::record_ids() const {
    std::vector<int> ids;
    for (const auto &op : ops) {
        if (auto *m = std::get_if<MeasureOp>(&op.op)) {
            ids.push_back(m->record);
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

static Operation parse_instruction(std::stringstream &ss, const std::string &word, Circuit &c, int depth) {
    auto need = [&](auto &x, const char *what) {
        if (!(ss >> x)) {
            throw std::invalid_argument(std::string("missing or bad ") + what);
        }
    };
    Operation op;
    if (word == "prep") {
        PrepareOp p{};
        need(p.qubit, "qubit");
        need(p.state.bloch[0], "bloch x");
        need(p.state.bloch[1], "bloch y");
        need(p.state.bloch[2], "bloch z");
        op.op = p;
    } else if (word == "clif") {
        CliffordOp g{};
        std::string name;
        need(g.qubit, "qubit");
        need(name, "gate name");
        g.gate = parse_clifford(name);
        op.op = g;
    } else if (word == "csign") {
        int q1, q2;
        std::string noise;
        double param;
        need(q1, "first qubit");
        need(q2, "second qubit");
        need(noise, "noise model");
        need(param, "noise parameter");
        op.op = CsignOp{q1, q2, NoiseModel(parse_noise_kind(noise), param)};
    } else if (word == "meas") {
        MeasureOp m{};
        std::string axis;
        need(m.qubit, "qubit");
        need(axis, "axis");
        need(m.record, "record id");
        m.axis = parse_axis(axis);
        op.op = m;
    } else if (word == "ifeq") {
        if (depth > 0) {
            throw std::invalid_argument("nested ifeq is not supported");
        }
        Condition cond{};
        std::string inner;
        need(cond.record, "record id");
        need(cond.value, "condition value");
        if (cond.value != 1 && cond.value != -1) {
            throw std::invalid_argument("condition value must be +1 or -1");
        }
        need(inner, "conditional instruction");
        op = parse_instruction(ss, inner, c, depth + 1);
        op.condition = cond;
    } else {
        throw std::invalid_argument("unknown instruction '" + word + "'");
    }
    return op;
}

Circuit parse_circuit(std::istream &in) {
    Circuit c;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::stringstream ss(line);
        std::string word;
        if (!(ss >> word)) {
            continue;
        }
        try {
            if (word == "qubits") {
                if (c.num_qubits != 0 || !(ss >> c.num_qubits)) {
                    throw std::invalid_argument("bad or repeated qubits line");
                }
                if (c.num_qubits < 1 || c.num_qubits > MAX_CIRCUIT_QUBITS) {
                    throw std::invalid_argument("circuit must have 1 to 8 qubits");
                }
            } else if (c.num_qubits == 0) {
                throw std::invalid_argument("'" + word + "' before the qubits line");
            } else {
                c.ops.push_back(parse_instruction(ss, word, c, 0));
            }
            std::string extra;
            if (ss >> extra) {
                throw std::invalid_argument("unexpected trailing token '" + extra + "'");
            }
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    c.validate();
    return c;
}

Circuit parse_circuit(const std::string &text) {
    std::stringstream ss(text);
    return parse_circuit(ss);
}

}  // namespace gencube
