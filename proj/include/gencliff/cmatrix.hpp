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

#ifndef GENCLIFF_CMATRIX_HPP
#define GENCLIFF_CMATRIX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencliff/cyclotomic.hpp"
#include "gencliff/numeric.hpp"

namespace gencliff {

/// Dense square matrix over the cyclotomics, row-major.
class CMatrix {
   public:
    CMatrix() = default;
    explicit CMatrix(int dim);
    CMatrix(int dim, std::vector<Cyclo> entries);
    static CMatrix identity(int dim);
    static CMatrix diagonal(const std::vector<Cyclo> &diag);
    static CMatrix from_rows(const std::vector<std::vector<Cyclo>> &rows);
    /// Rows of cyclotomic literals.
    static CMatrix parse(const std::vector<std::vector<std::string>> &rows);

    int dim() const noexcept {
        return dim_;
    }
    const Cyclo &operator()(int r, int c) const {
        return entries_[static_cast<size_t>(r) * dim_ + c];
    }
    Cyclo &operator()(int r, int c) {
        return entries_[static_cast<size_t>(r) * dim_ + c];
    }
    const std::vector<Cyclo> &entries() const noexcept {
        return entries_;
    }

    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator+(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator-(const CMatrix &a, const CMatrix &b);
    CMatrix scaled(const Cyclo &c) const;

    CMatrix transpose() const;
    CMatrix adjoint() const;
    CMatrix conj() const;
    Cyclo trace() const;
    Cyclo determinant() const;
    std::optional<CMatrix> inverse() const;
    CMatrix pow(long long e) const;

    bool is_zero() const;
    bool is_identity() const;
    /// c if this equals c * I.
    std::optional<Cyclo> scalar_value() const;
    bool is_unitary() const;
    /// Exactly one nonzero entry in every row and column.
    bool is_generalised_permutation() const;
    bool is_diagonal() const;

    /// lcm of the conductors of the nonzero entries.
    int conductor() const;
    CMatrix lifted(int m) const;
    /// Every entry at its minimal conductor.
    CMatrix canonical() const;
    /// (N, c) with *this = c * N and the first nonzero entry of N (row-major) equal to 1.
    std::pair<CMatrix, Cyclo> projective_normal_form() const;

    bool operator==(const CMatrix &o) const;
    /// Hash/compare of the stored representation; consistent for matrices whose
    /// nonzero entries share one conductor.
    std::size_t raw_hash() const noexcept;
    bool raw_equal(const CMatrix &o) const noexcept;

    /// Canonical text key, e.g. "[[1, 0], [0, w4^1]]".
    std::string str() const;
    std::vector<std::vector<std::string>> to_strings() const;
    ComplexMatrix approx() const;

   private:
    int dim_ = 0;
    std::vector<Cyclo> entries_;
};

CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Matrix-vector product.
std::vector<Cyclo> apply(const CMatrix &m, const std::vector<Cyclo> &v);

/// SWAP on C^d (x) C^d.
CMatrix swap_gate(int d);

}  // namespace gencliff

#endif
