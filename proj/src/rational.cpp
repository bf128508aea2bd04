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

#include "gencliff/rational.hpp"

#include <cctype>
#include <numeric>

#include "gencliff/error.hpp"

namespace gencliff {

namespace {

constexpr int64_t kSmallLimit = int64_t{1} << 62;

inline bool fits(__int128 v) {
    return v < kSmallLimit && v > -kSmallLimit;
}

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
        }
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void set_mpz(mpz_class &z, __int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
    mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(static_cast<uint64_t>(u)));
    if (neg) {
        mpz_neg(z.get_mpz_t(), z.get_mpz_t());
    }
}

inline int64_t iabs(int64_t v) {
    return v < 0 ? -v : v;
}

}  // namespace

Rational::Rational(long long n) {
    if (fits(n)) {
        num_ = n;
    } else {
        assign_mpq(mpq_class(mpz_class(std::to_string(n))));
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) {
        fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    }
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class &q) {
    mpq_class c = q;
    c.canonicalize();
    assign_mpq(std::move(c));
}

Rational::Rational(const Rational &other) : num_(other.num_), den_(other.den_) {
    if (other.big_) {
        big_ = std::make_unique<mpq_class>(*other.big_);
    }
}

Rational &Rational::operator=(const Rational &other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        if (other.big_) {
            big_ = std::make_unique<mpq_class>(*other.big_);
        } else {
            big_.reset();
        }
    }
    return *this;
}

Rational Rational::from_i128(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Rational r;
    if (num == 0) {
        return r;
    }
    unsigned __int128 un = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
    unsigned __int128 g = gcd_u128(un, static_cast<unsigned __int128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (fits(num) && fits(den)) {
        r.num_ = static_cast<int64_t>(num);
        r.den_ = static_cast<int64_t>(den);
        return r;
    }
    mpq_class q;
    set_mpz(q.get_num(), num);
    set_mpz(q.get_den(), den);
    r.assign_mpq(std::move(q));
    return r;
}

void Rational::assign_mpq(mpq_class &&q) {
    const mpz_class &n = q.get_num();
    const mpz_class &d = q.get_den();
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
        num_ = mpz_get_si(n.get_mpz_t());
        den_ = mpz_get_si(d.get_mpz_t());
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(std::string_view text) {
    size_t b = 0;
    size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) {
        b++;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) {
        e--;
    }
    std::string s(text.substr(b, e - b));
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        i++;
    }
    size_t digits = 0;
    bool slash = false;
    size_t den_digits = 0;
    for (; i < s.size(); i++) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? den_digits : digits)++;
        } else if (c == '/' && !slash) {
            slash = true;
        } else {
            fail(ErrorKind::ParseError, "bad rational literal '" + s + "'");
        }
    }
    if (digits == 0 || (slash && den_digits == 0)) {
        fail(ErrorKind::ParseError, "bad rational literal '" + s + "'");
    }
    if (!s.empty() && s[0] == '+') {
        s.erase(0, 1);
    }
    mpq_class q(s, 10);
    if (q.get_den() == 0) {
        fail(ErrorKind::DivisionByZero, "rational literal '" + s + "' has zero denominator");
    }
    return Rational(q);
}

bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        fail(ErrorKind::DivisionByZero, "inverse of zero rational");
    }
    if (!big_) {
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = iabs(num_);
        return r;
    }
    mpq_class q = 1 / *big_;
    q.canonicalize();
    Rational r;
    r.assign_mpq(std::move(q));
    return r;
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) {
        *r.big_ = -*r.big_;
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

Rational &Rational::operator+=(const Rational &o) {
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            int64_t n = num_ + o.num_;
            if (den_ == 1) {
                if (fits(n)) {
                    num_ = n;
                    return *this;
                }
                *this = from_i128(n, 1);
                return *this;
            }
            *this = from_i128(n, den_);
            return *this;
        }
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        if (std::gcd(den_, o.den_) == 1 && fits(n) && fits(d)) {
            num_ = static_cast<int64_t>(n);
            den_ = static_cast<int64_t>(d);
            if (num_ == 0) {
                den_ = 1;
            }
            return *this;
        }
        *this = from_i128(n, d);
        return *this;
    }
    mpq_class q = to_mpq() + o.to_mpq();
    assign_mpq(std::move(q));
    return *this;
}

Rational &Rational::operator-=(const Rational &o) {
    if (!o.big_) {
        Rational neg;
        neg.num_ = -o.num_;
        neg.den_ = o.den_;
        return *this += neg;
    }
    return *this += -o;
}

Rational operator*(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) {
            return Rational();
        }
        int64_t g1 = std::gcd(iabs(a.num_), b.den_);
        int64_t g2 = std::gcd(iabs(b.num_), a.den_);
        __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
        __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
        if (fits(n) && fits(d)) {
            Rational r;
            r.num_ = static_cast<int64_t>(n);
            r.den_ = static_cast<int64_t>(d);
            return r;
        }
        return Rational::from_i128(n, d);
    }
    Rational r;
    r.assign_mpq(a.to_mpq() * b.to_mpq());
    return r;
}

Rational operator/(const Rational &a, const Rational &b) {
    return a * b.inverse();
}

Rational &Rational::operator*=(const Rational &o) {
    *this = *this * o;
    return *this;
}

Rational &Rational::operator/=(const Rational &o) {
    *this = *this * o.inverse();
    return *this;
}

void Rational::add_product(const Rational &a, const Rational &b) {
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    *this += a * b;
}

bool Rational::operator==(const Rational &o) const {
    if (!big_ && !o.big_) {
        return num_ == o.num_ && den_ == o.den_;
    }
    if (big_ && o.big_) {
        return *big_ == *o.big_;
    }
    return false;
}

std::strong_ordering Rational::operator<=>(const Rational &o) const {
    if (!big_ && !o.big_) {
        __int128 l = static_cast<__int128>(num_) * o.den_;
        __int128 r = static_cast<__int128>(o.num_) * den_;
        return l <=> r;
    }
    int c = cmp(to_mpq(), o.to_mpq());
    return c <=> 0;
}

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num_);
    mpz_set_si(q.get_den_mpz_t(), den_);
    return q;
}

double Rational::to_double() const {
    if (big_) {
        return big_->get_d();
    }
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const noexcept {
    uint64_t h;
    if (big_) {
        h = mpz_get_ui(big_->get_num_mpz_t()) * 0x9E3779B97F4A7C15ULL;
        h ^= mpz_get_ui(big_->get_den_mpz_t()) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        h ^= static_cast<uint64_t>(sgn(*big_));
    } else {
        h = static_cast<uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<uint64_t>(den_) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace gencliff
