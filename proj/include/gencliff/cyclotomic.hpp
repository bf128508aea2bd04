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

#ifndef GENCLIFF_CYCLOTOMIC_HPP
#define GENCLIFF_CYCLOTOMIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gencliff/rational.hpp"

namespace gencliff {

struct CycloTerm {
    int exp;
    Rational coeff;
};

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// A value is stored at some conductor N (a multiple of its minimal conductor) as
/// coordinates in the power basis 1, z, ..., z^(phi(N)-1) of Q(zeta_N) = Q[z]/Phi_N(z).
/// For fixed N that representation is unique. Binary operations lift both sides to
/// the lcm of their conductors. `canonical()` moves a value down to its minimal
/// conductor, and that form is what gets printed and keyed.
class Cyclo {
   public:
    Cyclo() = default;
    Cyclo(Rational r);  // NOLINT(google-explicit-constructor)
    Cyclo(long long n) : Cyclo(Rational(n)) {
    }  // NOLINT(google-explicit-constructor)
    Cyclo(int n) : Cyclo(Rational(n)) {
    }  // NOLINT(google-explicit-constructor)

    /// zeta_N^k, returned at conductor N / gcd(N, k) (further reduced when that is 2 mod 4).
    static Cyclo root_of_unity(int n, long long k);

    /// Parses the literal syntax: sums/products of `p/q`, `wN^k`, `i`, parentheses.
    static Cyclo parse(std::string_view text);

    int conductor() const noexcept {
        return n_;
    }
    const std::vector<CycloTerm> &terms() const noexcept {
        return terms_;
    }

    bool is_zero() const noexcept {
        return terms_.empty();
    }
    bool is_rational() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
    }
    bool is_one() const noexcept {
        return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff.is_one();
    }
    /// The rational value, if this is rational.
    std::optional<Rational> as_rational() const;

    /// The same value expressed at conductor m (m must be a multiple of conductor()).
    Cyclo lifted(int m) const;
    /// The same value at its minimal conductor.
    Cyclo canonical() const;
    int minimal_conductor() const {
        return canonical().conductor();
    }

    Cyclo conj() const;
    /// Galois automorphism zeta_N -> zeta_N^a with gcd(a, N) = 1.
    Cyclo galois(long long a) const;
    Cyclo inverse() const;
    Cyclo pow(long long e) const;

    Cyclo operator-() const;
    Cyclo &operator+=(const Cyclo &o);
    Cyclo &operator-=(const Cyclo &o);
    Cyclo &operator*=(const Cyclo &o);
    Cyclo &operator/=(const Cyclo &o);
    friend Cyclo operator+(Cyclo a, const Cyclo &b) {
        a += b;
        return a;
    }
    friend Cyclo operator-(Cyclo a, const Cyclo &b) {
        a -= b;
        return a;
    }
    friend Cyclo operator*(const Cyclo &a, const Cyclo &b);
    friend Cyclo operator/(const Cyclo &a, const Cyclo &b) {
        return a * b.inverse();
    }
    Cyclo scaled(const Rational &r) const;

    /// Exact equality of field elements (lifts to a common conductor when needed).
    bool operator==(const Cyclo &o) const;

    std::complex<double> to_complex() const;

    /// If this is a root of unity, returns (k, m) with this = zeta_m^k, gcd(k, m) = 1, 0 <= k < m.
    std::optional<std::pair<int, int>> root_of_unity_exponent() const;

    /// Canonical printed form; parse(str()) == *this.
    std::string str() const;

    /// Hash of the representation at the current conductor. Only consistent between
    /// values stored at the same conductor; use canonical() first otherwise.
    std::size_t raw_hash() const noexcept;
    /// Exact representation comparison at the current conductor.
    bool raw_equal(const Cyclo &o) const noexcept;

   private:
    friend class CycloAccumulator;
    Cyclo(int n, std::vector<CycloTerm> terms) : n_(n), terms_(std::move(terms)) {
    }

    int n_ = 1;
    std::vector<CycloTerm> terms_;
};

inline bool is_zero(const Cyclo &c) {
    return c.is_zero();
}
inline Cyclo inverse(const Cyclo &c) {
    return c.inverse();
}

/// Exact sum of products a_k * b_k, folded into the power basis once.
Cyclo sum_of_products(const std::vector<std::pair<const Cyclo *, const Cyclo *>> &pairs);

/// Largest conductor any operation may produce. Default 7920.
int max_conductor();
void set_max_conductor(int n);

/// Euler's totient.
int euler_phi(int n);

}  // namespace gencliff

#endif
