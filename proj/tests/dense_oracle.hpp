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

// Dense state-vector reference for small circuits. Uses only matrix arithmetic,
// none of the table machinery it checks.

#ifndef GENCLIFF_TESTS_DENSE_ORACLE_HPP
#define GENCLIFF_TESTS_DENSE_ORACLE_HPP

#include <vector>

#include "gencliff/simulator.hpp"

namespace gencliff::oracle {

using Vec = std::vector<Cyclo>;

inline std::size_t ipow(int d, int n) {
    std::size_t r = 1;
    for (int k = 0; k < n; k++) {
        r *= static_cast<std::size_t>(d);
    }
    return r;
}

inline Vec product_state(const std::vector<Vec> &wires) {
    Vec psi{Cyclo(1)};
    for (const auto &w : wires) {
        Vec next;
        next.reserve(psi.size() * w.size());
        for (const auto &a : psi) {
            for (const auto &b : w) {
                next.push_back(a * b);
            }
        }
        psi = std::move(next);
    }
    return psi;
}

// Wire 0 is the most significant digit.
inline Vec apply_gate(const Vec &psi, const CMatrix &m, const std::vector<int> &wires, int d, int n) {
    std::size_t size = psi.size();
    int k = static_cast<int>(wires.size());
    std::vector<std::size_t> stride(k);
    for (int j = 0; j < k; j++) {
        stride[j] = ipow(d, n - 1 - wires[j]);
    }
    Vec out(size, Cyclo(0));
    for (std::size_t idx = 0; idx < size; idx++) {
        if (psi[idx].is_zero()) {
            continue;
        }
        int col = 0;
        std::size_t base = idx;
        for (int j = 0; j < k; j++) {
            int digit = static_cast<int>((idx / stride[j]) % d);
            col = col * d + digit;
            base -= digit * stride[j];
        }
        for (int row = 0; row < m.dim(); row++) {
            const Cyclo &e = m(row, col);
            if (e.is_zero()) {
                continue;
            }
            std::size_t target = base;
            int r = row;
            for (int j = k - 1; j >= 0; j--) {
                target += (r % d) * stride[j];
                r /= d;
            }
            out[target] += e * psi[idx];
        }
    }
    return out;
}

inline Cyclo braket(const Vec &a, const Vec &b) {
    Cyclo s(0);
    for (std::size_t i = 0; i < a.size(); i++) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s += a[i].conj() * b[i];
        }
    }
    return s;
}

// Sum over measurement branches of <psi_b| O |psi_b>, O given on all wires.
inline Cyclo expectation(const Circuit &c, const CMatrix &observable) {
    int d = c.dim();
    int n = c.n_wires();
    std::vector<Vec> branches{product_state(c.input())};
    const auto &gates = c.gates();
    auto measure = [&](std::size_t pos) {
        for (const auto &m : c.measurements()) {
            if (m.after != pos) {
                continue;
            }
            std::size_t stride = ipow(d, n - 1 - m.wire);
            std::vector<Vec> next;
            for (const auto &b : branches) {
                for (int v = 0; v < d; v++) {
                    Vec p(b.size(), Cyclo(0));
                    bool any = false;
                    for (std::size_t i = 0; i < b.size(); i++) {
                        if (static_cast<int>((i / stride) % d) == v) {
                            p[i] = b[i];
                            any = any || !b[i].is_zero();
                        }
                    }
                    if (any) {
                        next.push_back(std::move(p));
                    }
                }
            }
            branches = std::move(next);
        }
    };
    for (std::size_t k = 0; k <= gates.size(); k++) {
        measure(k);
        if (k < gates.size()) {
            for (auto &b : branches) {
                b = apply_gate(b, gates[k].matrix, gates[k].wires, d, n);
            }
        }
    }
    Cyclo total(0);
    for (const auto &b : branches) {
        total += braket(b, apply(observable, b));
    }
    return total;
}

// C as a dense matrix, for measurement-free circuits.
inline CMatrix unitary(const Circuit &c) {
    int d = c.dim();
    int n = c.n_wires();
    std::size_t size = ipow(d, n);
    CMatrix u(static_cast<int>(size));
    for (std::size_t col = 0; col < size; col++) {
        Vec e(size, Cyclo(0));
        e[col] = Cyclo(1);
        for (const auto &g : c.gates()) {
            e = apply_gate(e, g.matrix, g.wires, d, n);
        }
        for (std::size_t row = 0; row < size; row++) {
            u(static_cast<int>(row), static_cast<int>(col)) = e[row];
        }
    }
    return u;
}

}  // namespace gencliff::oracle

#endif
