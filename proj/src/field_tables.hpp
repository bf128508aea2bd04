// Copyright 2026 The gencliff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENCLIFF_FIELD_TABLES_HPP
#define GENCLIFF_FIELD_TABLES_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace gencliff::detail {

// Per-conductor lookup data, built once and never mutated.
struct FieldTables {
    int n = 1;
    int phi = 1;
    // reduce[e] is z^e mod Phi_n in the power basis, for 0 <= e < n.
    std::vector<std::vector<std::pair<int, int64_t>>> reduce;
    std::vector<std::complex<double>> roots;
    std::vector<int> units;
    std::vector<int> primes;
};

const FieldTables &field(int n);

}  // namespace gencliff::detail

#endif
