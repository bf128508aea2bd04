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

#include "gencliff/cmatrix.hpp"

#include <numeric>

#include "gencliff/error.hpp"

namespace gencliff {

namespace {

// Laplace expansion over the rows/cols selected; fine for the d <= 4 (at most 8) used here.
Cyclo minor_det(const CMatrix &m, std::vector<int> &rows, std::vector<int> &cols) {
    size_t k = rows.size();
    if (k == 1) {
        return m(rows[0], cols[0]);
    }
    if (k == 2) {
        return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
    }
    Cyclo total;
    int r0 = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; j++) {
        const Cyclo &a = m(r0, cols[j]);
        if (a.is_zero()) {
            continue;
        }
        std::vector<int> sub_cols;
        for (size_t t = 0; t < k; t++) {
            if (t != j) {
                sub_cols.push_back(cols[t]);
            }
        }
        Cyclo term = a * minor_det(m, sub_rows, sub_cols);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

}  // namespace

CMatrix::CMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {
}

CMatrix::CMatrix(int dim, std::vector<Cyclo> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(dim) * dim) {
        fail(ErrorKind::DimensionMismatch, "matrix entry count does not match dimension");
    }
}

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; i++) {
        m(i, i) = Cyclo(1);
    }
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Cyclo> &diag) {
    CMatrix m(static_cast<int>(diag.size()));
    for (size_t i = 0; i < diag.size(); i++) {
        m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    }
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<Cyclo>> &rows) {
    int d = static_cast<int>(rows.size());
    CMatrix m(d);
    for (int r = 0; r < d; r++) {
        if (static_cast<int>(rows[r].size()) != d) {
            fail(ErrorKind::DimensionMismatch, "matrix is not square");
        }
        for (int c = 0; c < d; c++) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

CMatrix CMatrix::parse(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::vector<Cyclo>> v;
    for (const auto &row : rows) {
        std::vector<Cyclo> r;
        for (const auto &s : row) {
            r.push_back(Cyclo::parse(s));
        }
        v.push_back(std::move(r));
    }
    return from_rows(v);
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.dim_ != b.dim_) {
        fail(ErrorKind::DimensionMismatch, "matrix product of different dimensions");
    }
    int d = a.dim_;
    CMatrix m(d);
    std::vector<std::pair<const Cyclo *, const Cyclo *>> pairs;
    pairs.reserve(d);
    for (int r = 0; r < d; r++) {
        for (int c = 0; c < d; c++) {
            pairs.clear();
            for (int k = 0; k < d; k++) {
                const Cyclo &x = a(r, k);
                const Cyclo &y = b(k, c);
                if (!x.is_zero() && !y.is_zero()) {
                    pairs.emplace_back(&x, &y);
                }
            }
            if (pairs.size() == 1) {
                m(r, c) = *pairs[0].first * *pairs[0].second;
            } else if (!pairs.empty()) {
                m(r, c) = sum_of_products(pairs);
            }
        }
    }
    return m;
}

CMatrix operator+(const CMatrix &a, const CMatrix &b) {
    if (a.dim_ != b.dim_) {
        fail(ErrorKind::DimensionMismatch, "matrix sum of different dimensions");
    }
    CMatrix m = a;
    for (size_t i = 0; i < m.entries_.size(); i++) {
        m.entries_[i] += b.entries_[i];
    }
    return m;
}

CMatrix operator-(const CMatrix &a, const CMatrix &b) {
    if (a.dim_ != b.dim_) {
        fail(ErrorKind::DimensionMismatch, "matrix difference of different dimensions");
    }
    CMatrix m = a;
    for (size_t i = 0; i < m.entries_.size(); i++) {
        m.entries_[i] -= b.entries_[i];
    }
    return m;
}

CMatrix CMatrix::scaled(const Cyclo &c) const {
    CMatrix m = *this;
    for (auto &e : m.entries_) {
        if (!e.is_zero()) {
            e = e * c;
        }
    }
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

CMatrix CMatrix::conj() const {
    CMatrix m = *this;
    for (auto &e : m.entries_) {
        e = e.conj();
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    return conj().transpose();
}

Cyclo CMatrix::trace() const {
    Cyclo t;
    for (int i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

Cyclo CMatrix::determinant() const {
    if (dim_ == 0) {
        return Cyclo(1);
    }
    std::vector<int> idx(dim_);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> cols = idx;
    return minor_det(*this, idx, cols);
}

std::optional<CMatrix> CMatrix::inverse() const {
    Cyclo det = determinant();
    if (det.is_zero()) {
        return std::nullopt;
    }
    Cyclo inv_det = det.inverse();
    if (dim_ == 1) {
        return CMatrix(1, {inv_det});
    }
    CMatrix m(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            // inverse(c, r) = (-1)^(r+c) det(minor without row r, col c) / det.
            std::vector<int> rows;
            std::vector<int> cols;
            for (int i = 0; i < dim_; i++) {
                if (i != r) {
                    rows.push_back(i);
                }
                if (i != c) {
                    cols.push_back(i);
                }
            }
            Cyclo cof = minor_det(*this, rows, cols);
            if (cof.is_zero()) {
                continue;
            }
            cof = cof * inv_det;
            m(c, r) = (r + c) % 2 == 0 ? cof : -cof;
        }
    }
    return m;
}

CMatrix CMatrix::pow(long long e) const {
    if (e < 0) {
        auto inv = inverse();
        if (!inv) {
            fail(ErrorKind::DivisionByZero, "negative power of a singular matrix");
        }
        return inv->pow(-e);
    }
    CMatrix result = identity(dim_);
    CMatrix base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

bool CMatrix::is_zero() const {
    for (const auto &e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool CMatrix::is_identity() const {
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            const Cyclo &e = (*this)(r, c);
            if (r == c ? !e.is_one() : !e.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Cyclo> CMatrix::scalar_value() const {
    if (dim_ == 0) {
        return std::nullopt;
    }
    const Cyclo &c = (*this)(0, 0);
    for (int r = 0; r < dim_; r++) {
        for (int k = 0; k < dim_; k++) {
            const Cyclo &e = (*this)(r, k);
            if (r == k ? !(e == c) : !e.is_zero()) {
                return std::nullopt;
            }
        }
    }
    return c;
}

bool CMatrix::is_unitary() const {
    return ((*this) * adjoint()).is_identity();
}

bool CMatrix::is_generalised_permutation() const {
    for (int r = 0; r < dim_; r++) {
        int row_count = 0;
        int col_count = 0;
        for (int c = 0; c < dim_; c++) {
            row_count += !(*this)(r, c).is_zero();
            col_count += !(*this)(c, r).is_zero();
        }
        if (row_count != 1 || col_count != 1) {
            return false;
        }
    }
    return true;
}

bool CMatrix::is_diagonal() const {
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            if (r != c && !(*this)(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

int CMatrix::conductor() const {
    int n = 1;
    for (const auto &e : entries_) {
        if (!e.is_rational()) {
            n = std::lcm(n, e.conductor());
        }
    }
    return n;
}

CMatrix CMatrix::lifted(int m) const {
    CMatrix out = *this;
    for (auto &e : out.entries_) {
        if (!e.is_zero() && e.conductor() != m) {
            e = e.lifted(m);
        }
    }
    return out;
}

CMatrix CMatrix::canonical() const {
    CMatrix out = *this;
    for (auto &e : out.entries_) {
        e = e.canonical();
    }
    return out;
}

std::pair<CMatrix, Cyclo> CMatrix::projective_normal_form() const {
    for (const auto &e : entries_) {
        if (!e.is_zero()) {
            Cyclo c = e;
            return {scaled(c.inverse()), c};
        }
    }
    return {*this, Cyclo()};
}

bool CMatrix::operator==(const CMatrix &o) const {
    if (dim_ != o.dim_) {
        return false;
    }
    for (size_t i = 0; i < entries_.size(); i++) {
        if (!(entries_[i] == o.entries_[i])) {
            return false;
        }
    }
    return true;
}

std::size_t CMatrix::raw_hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(dim_);
    for (const auto &e : entries_) {
        h = h * 0x9E3779B97F4A7C15ULL + e.raw_hash();
        h ^= h >> 29;
    }
    return h;
}

bool CMatrix::raw_equal(const CMatrix &o) const noexcept {
    if (dim_ != o.dim_) {
        return false;
    }
    for (size_t i = 0; i < entries_.size(); i++) {
        if (!entries_[i].raw_equal(o.entries_[i])) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::string>> CMatrix::to_strings() const {
    std::vector<std::vector<std::string>> rows(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            rows[r].push_back((*this)(r, c).str());
        }
    }
    return rows;
}

std::string CMatrix::str() const {
    std::string out = "[";
    auto rows = to_strings();
    for (int r = 0; r < dim_; r++) {
        out += r ? ", [" : "[";
        for (int c = 0; c < dim_; c++) {
            if (c) {
                out += ", ";
            }
            out += rows[r][c];
        }
        out += "]";
    }
    return out + "]";
}

ComplexMatrix CMatrix::approx() const {
    ComplexMatrix m(dim_);
    for (size_t i = 0; i < entries_.size(); i++) {
        m.a[i] = entries_[i].to_complex();
    }
    return m;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    int da = a.dim();
    int db = b.dim();
    CMatrix m(da * db);
    for (int i = 0; i < da; i++) {
        for (int j = 0; j < da; j++) {
            const Cyclo &x = a(i, j);
            if (x.is_zero()) {
                continue;
            }
            for (int k = 0; k < db; k++) {
                for (int l = 0; l < db; l++) {
                    const Cyclo &y = b(k, l);
                    if (!y.is_zero()) {
                        m(i * db + k, j * db + l) = x * y;
                    }
                }
            }
        }
    }
    return m;
}

std::vector<Cyclo> apply(const CMatrix &m, const std::vector<Cyclo> &v) {
    int d = m.dim();
    if (static_cast<int>(v.size()) != d) {
        fail(ErrorKind::DimensionMismatch, "vector length does not match matrix");
    }
    std::vector<Cyclo> out(d);
    std::vector<std::pair<const Cyclo *, const Cyclo *>> pairs;
    for (int r = 0; r < d; r++) {
        pairs.clear();
        for (int c = 0; c < d; c++) {
            if (!m(r, c).is_zero() && !v[c].is_zero()) {
                pairs.emplace_back(&m(r, c), &v[c]);
            }
        }
        if (!pairs.empty()) {
            out[r] = sum_of_products(pairs);
        }
    }
    return out;
}

CMatrix swap_gate(int d) {
    CMatrix m(d * d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m(j * d + i, i * d + j) = Cyclo(1);
        }
    }
    return m;
}

}  // namespace gencliff
