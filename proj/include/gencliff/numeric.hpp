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

#ifndef GENCLIFF_NUMERIC_HPP
#define GENCLIFF_NUMERIC_HPP

#include <complex>
#include <vector>

namespace gencliff {

/// Dense complex matrix in double precision. Used only for prefilters, display and
/// the unitarization cross-check; no exact decision depends on it alone.
struct ComplexMatrix {
    int dim = 0;
    std::vector<std::complex<double>> a;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d) {
    }
    static ComplexMatrix identity(int d);

    std::complex<double> &operator()(int r, int c) {
        return a[static_cast<size_t>(r) * dim + c];
    }
    const std::complex<double> &operator()(int r, int c) const {
        return a[static_cast<size_t>(r) * dim + c];
    }

    std::complex<double> trace() const;
    ComplexMatrix adjoint() const;
    friend ComplexMatrix operator*(const ComplexMatrix &x, const ComplexMatrix &y);
};

/// Largest entrywise modulus of x - y.
double max_abs_diff(const ComplexMatrix &x, const ComplexMatrix &y);

}  // namespace gencliff

#endif
