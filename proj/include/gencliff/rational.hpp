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

#ifndef GENCLIFF_RATIONAL_HPP
#define GENCLIFF_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace gencliff {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits live inline; anything
/// larger is promoted to a GMP rational. The representation is canonical (a value
/// is small iff it fits), so equality never needs to compare across the two forms.
class Rational {
   public:
    Rational() noexcept = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    Rational(long n) : Rational(static_cast<long long>(n)) {
    }  // NOLINT(google-explicit-constructor)
    Rational(int n) : Rational(static_cast<long long>(n)) {
    }  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class &q);

    Rational(const Rational &other);
    Rational(Rational &&other) noexcept = default;
    Rational &operator=(const Rational &other);
    Rational &operator=(Rational &&other) noexcept = default;
    ~Rational() = default;

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept {
        return !big_ && num_ == 0;
    }
    bool is_one() const noexcept {
        return !big_ && num_ == 1 && den_ == 1;
    }
    bool is_integer() const;
    bool is_small() const noexcept {
        return !big_;
    }
    int sign() const;

    /// Only meaningful when is_small().
    int64_t small_num() const noexcept {
        return num_;
    }
    int64_t small_den() const noexcept {
        return den_;
    }

    Rational inverse() const;
    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    /// this += a * b without an intermediate allocation on the fast path.
    void add_product(const Rational &a, const Rational &b);

    friend Rational operator+(Rational a, const Rational &b) {
        a += b;
        return a;
    }
    friend Rational operator-(Rational a, const Rational &b) {
        a -= b;
        return a;
    }
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);

    bool operator==(const Rational &other) const;
    std::strong_ordering operator<=>(const Rational &other) const;

    mpq_class to_mpq() const;
    double to_double() const;
    std::string str() const;
    std::size_t hash() const noexcept;

   private:
    static Rational from_i128(__int128 num, __int128 den);
    void assign_mpq(mpq_class &&q);

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

inline bool is_zero(const Rational &r) {
    return r.is_zero();
}
inline Rational inverse(const Rational &r) {
    return r.inverse();
}

}  // namespace gencliff

template <>
struct std::hash<gencliff::Rational> {
    std::size_t operator()(const gencliff::Rational &r) const noexcept {
        return r.hash();
    }
};

#endif
