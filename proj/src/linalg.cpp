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

#include "gencliff/linalg.hpp"

#include <utility>

namespace gencliff {

std::vector<int> rref(CycloRows &rows, int ncols) {
    std::vector<int> pivots;
    size_t next = 0;
    for (int col = 0; col < ncols && next < rows.size(); col++) {
        // Prefer the sparsest pivot: single-term entries invert without a norm computation.
        size_t best = rows.size();
        size_t best_terms = 0;
        for (size_t r = next; r < rows.size(); r++) {
            const Cyclo &e = rows[r][col];
            if (!e.is_zero() && (best == rows.size() || e.terms().size() < best_terms)) {
                best = r;
                best_terms = e.terms().size();
            }
        }
        if (best == rows.size()) {
            continue;
        }
        std::swap(rows[best], rows[next]);
        auto &prow = rows[next];
        if (!prow[col].is_one()) {
            Cyclo inv = prow[col].inverse();
            for (int c = col; c < ncols; c++) {
                if (!prow[c].is_zero()) {
                    prow[c] = prow[c] * inv;
                }
            }
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == next || rows[r][col].is_zero()) {
                continue;
            }
            Cyclo f = rows[r][col];
            for (int c = col; c < ncols; c++) {
                if (!prow[c].is_zero()) {
                    rows[r][c] -= f * prow[c];
                }
            }
        }
        pivots.push_back(col);
        next++;
    }
    rows.resize(next);
    return pivots;
}

CycloRows nullspace(CycloRows rows, int ncols) {
    std::vector<int> pivots = rref(rows, ncols);
    std::vector<int> pivot_of_col(ncols, -1);
    for (size_t i = 0; i < pivots.size(); i++) {
        pivot_of_col[pivots[i]] = static_cast<int>(i);
    }
    CycloRows basis;
    for (int f = 0; f < ncols; f++) {
        if (pivot_of_col[f] >= 0) {
            continue;
        }
        std::vector<Cyclo> v(ncols);
        v[f] = Cyclo(1);
        for (size_t i = 0; i < pivots.size(); i++) {
            const Cyclo &e = rows[i][f];
            if (!e.is_zero()) {
                v[pivots[i]] = -e;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(CycloRows rows, int ncols) {
    return static_cast<int>(rref(rows, ncols).size());
}

}  // namespace gencliff
