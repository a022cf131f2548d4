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

#ifndef _GENCUBE_HN_SIM_H
#define _GENCUBE_HN_SIM_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gencube/circuit.h"

namespace gencube {

/// Outcome strings hold one character per record id in increasing id order:
/// '+' for +1, '-' for -1, '.' when the record was never written.
using Histogram = std::map<std::string, uint64_t>;
using Distribution = std::map<std::string, double>;

struct NotCubeSeparable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Samples measurement records by tracking one cube vertex per qubit.
///
/// Each noisy CSIGN is decomposed once per input vertex pair at construction;
/// sampling then draws output vertex pairs from the cached weights.
/// Shots run in blocks of 4096, each seeded from (seed, block index), so the
/// histogram does not depend on the number of worker threads.
class HnSimulator {
   public:
    explicit HnSimulator(Circuit circuit);

    Histogram sample(uint64_t shots, uint64_t seed) const;
    size_t distinct_gates() const {
        return gate_tables_.size();
    }

   private:
    using PairTable = std::array<std::array<double, 64>, 64>;

    Histogram sample_block(uint64_t count, uint64_t seed, uint64_t block) const;

    Circuit circuit_;
    std::vector<int> record_slot_;
    size_t num_records_ = 0;
    std::vector<int> op_gate_;
    std::vector<PairTable> gate_tables_;
};

Histogram simulate_hn(const Circuit &circuit, uint64_t shots, uint64_t seed);

/// Exact outcome distribution by density-matrix evolution with explicit branching.
/// Throws std::invalid_argument if a preparation lies outside the Bloch sphere.
Distribution simulate_dense(const Circuit &circuit);

Distribution normalize(const Histogram &histogram);
double tvd(const Distribution &a, const Distribution &b);
void write_histogram_csv(std::ostream &out, const Histogram &histogram);

}  // namespace gencube

#endif
