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

#ifndef _GENCUBE_CIRCUIT_H
#define _GENCUBE_CIRCUIT_H

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gencube/gates_noise.h"

namespace gencube {

inline constexpr int MAX_CIRCUIT_QUBITS = 8;

struct PrepareOp {
    int qubit;
    BlochOp state;
};

struct CliffordOp {
    int qubit;
    Clifford1Q gate;
};

struct CsignOp {
    int q1;
    int q2;
    NoiseModel noise;
};

struct MeasureOp {
    int qubit;
    PauliAxis axis;
    int record;
};

struct Condition {
    int record;
    int value;
};

struct Operation {
    std::variant<PrepareOp, CliffordOp, CsignOp, MeasureOp> op;
    /// When set, the operation runs only if the record holds the given +-1 value.
    std::optional<Condition> condition;
};

/// Qubits start in the state with Bloch vector (0, 0, 1).
struct Circuit {
    int num_qubits = 0;
    std::vector<Operation> ops;

    /// Throws std::invalid_argument on out-of-range qubits, repeated record ids,
    /// conditions on records not yet written, or bad noise parameters.
    void validate() const;
    /// Record ids in increasing order; outcome strings list records in this order.
    std::vector<int> record_ids() const;
};

/// Text format, one instruction per line, '#' starts a comment:
///   qubits N
///   prep q bx by bz
///   clif q {X|Y|Z|S|H}
///   csign q1 q2 {joint-depol|local-depol|local-dephase|epg-dephase} param
///   meas q {X|Y|Z} record_id
///   ifeq record_id {+1|-1} <any non-conditional instruction>
Circuit parse_circuit(std::istream &in);
Circuit parse_circuit(const std::string &text);

}  // namespace gencube

#endif
