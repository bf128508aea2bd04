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

#include "gencliff/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace gencliff {

ComplexMatrix ComplexMatrix::identity(int d) {
    ComplexMatrix m(d);
    for (int i = 0; i < d; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

std::complex<double> ComplexMatrix::trace() const {
    std::complex<double> t = 0;
    for (int i = 0; i < dim; i++) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; r++) {
        for (int c = 0; c < dim; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

ComplexMatrix operator*(const ComplexMatrix &x, const ComplexMatrix &y) {
    int d = x.dim;
    ComplexMatrix m(d);
    for (int r = 0; r < d; r++) {
        for (int k = 0; k < d; k++) {
            std::complex<double> v = x(r, k);
            if (v == 0.0) {
                continue;
            }
            for (int c = 0; c < d; c++) {
                m(r, c) += v * y(k, c);
            }
        }
    }
    return m;
}

double max_abs_diff(const ComplexMatrix &x, const ComplexMatrix &y) {
    double m = 0;
    for (size_t i = 0; i < x.a.size(); i++) {
        m = std::max(m, std::abs(x.a[i] - y.a[i]));
    }
    return m;
}

}  // namespace gencliff
