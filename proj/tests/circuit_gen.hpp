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

// Random normaliser circuits over the Pauli group and G_m(2), for oracle comparisons.

#ifndef GENCLIFF_TESTS_CIRCUIT_GEN_HPP
#define GENCLIFF_TESTS_CIRCUIT_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "gencliff/catalog.hpp"
#include "gencliff/simulator.hpp"

namespace gencliff::gen {

struct GatePool {
    MatrixGroup group;
    std::vector<std::string> one;
    std::vector<std::string> two;
};

inline GatePool pauli_pool() {
    return {pauli().close().with_name("pauli"), {"H", "P", "X", "Y", "Z"}, {"CZ", "CNOT", "SWAP"}};
}

inline GatePool gm2_pool() {
    return {gm(2).close().with_name("Gm(2)"), {"X", "Z", "P", "Zroot8"}, {"CZ", "SWAP"}};
}

inline std::vector<std::vector<Cyclo>> qubit_states() {
    Cyclo s = inv_sqrt_dim(2);
    Cyclo i = Cyclo::root_of_unity(4, 1);
    Cyclo w8 = Cyclo::root_of_unity(8, 1);
    return {
        {1, 0},
        {0, 1},
        {s, s},
        {s, -s},
        {s, i * s},
        {Cyclo(Rational(3, 5)), Cyclo(Rational(4, 5))},
        {Cyclo(Rational(3, 5)), i * Cyclo(Rational(4, 5))},
        {w8 * s, s},
    };
}

template <class Rng>
std::size_t pick(Rng &rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

struct CircuitSpec {
    int n_wires = 1;
    std::vector<std::vector<Cyclo>> input;
    std::vector<Gate> gates;
    std::vector<Measurement> measurements;
};

template <class Rng>
CircuitSpec random_spec(Rng &rng, const GatePool &pool, int max_wires, int max_gates, int max_measurements) {
    CircuitSpec c;
    c.n_wires = 1 + static_cast<int>(pick(rng, max_wires));
    auto states = qubit_states();
    for (int w = 0; w < c.n_wires; w++) {
        c.input.push_back(states[pick(rng, states.size())]);
    }
    int n_gates = static_cast<int>(pick(rng, max_gates + 1));
    for (int k = 0; k < n_gates; k++) {
        Gate g;
        if (c.n_wires >= 2 && pick(rng, 3) == 0) {
            g.label = pool.two[pick(rng, pool.two.size())];
            int a = static_cast<int>(pick(rng, c.n_wires));
            int b = static_cast<int>(pick(rng, c.n_wires - 1));
            if (b >= a) {
                b++;
            }
            g.wires = {a, b};
        } else {
            g.label = pool.one[pick(rng, pool.one.size())];
            g.wires = {static_cast<int>(pick(rng, c.n_wires))};
        }
        g.matrix = *named_gate(g.label);
        c.gates.push_back(std::move(g));
    }
    int n_meas = max_measurements > 0 ? static_cast<int>(pick(rng, max_measurements + 1)) : 0;
    for (int k = 0; k < n_meas; k++) {
        c.measurements.push_back({static_cast<int>(pick(rng, c.n_wires)), pick(rng, c.gates.size() + 1)});
    }
    return c;
}

template <class Rng>
Observable random_observable(Rng &rng, const MatrixGroup &group, int n_wires) {
    Observable o;
    o.factors.assign(n_wires, 0);
    for (int w = 0; w < n_wires; w++) {
        if (pick(rng, 2) == 0) {
            o.factors[w] = pick(rng, group.order());
        }
    }
    return o;
}

}  // namespace gencliff::gen

#endif
