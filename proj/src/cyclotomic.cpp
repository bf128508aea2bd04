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

#include "gencliff/cyclotomic.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "gencliff/error.hpp"
#include "field_tables.hpp"

namespace gencliff {

namespace {

std::atomic<int> g_max_conductor{7920};

}  // namespace

int max_conductor() {
    return g_max_conductor.load();
}

void set_max_conductor(int n) {
    if (n < 1) {
        fail(ErrorKind::InvalidInput, "conductor limit must be positive");
    }
    g_max_conductor.store(n);
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

namespace detail {

namespace {

std::mutex g_field_mutex;
constexpr int kDirectSlots = 8192;
std::array<std::atomic<const FieldTables *>, kDirectSlots + 1> g_direct{};
// Function-local so values built during static initialisation elsewhere work.
std::map<int, std::unique_ptr<FieldTables>> &g_fields() {
    static auto *m = new std::map<int, std::unique_ptr<FieldTables>>;
    return *m;
}
std::map<int, std::vector<int64_t>> &g_cyclotomic_polys() {
    static auto *m = new std::map<int, std::vector<int64_t>>;
    return *m;
}

// Phi_n as coefficients c_0..c_phi (monic). Caller holds g_field_mutex.
const std::vector<int64_t> &cyclotomic_poly_locked(int n) {
    auto it = g_cyclotomic_polys().find(n);
    if (it != g_cyclotomic_polys().end()) {
        return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; d++) {
        if (n % d != 0) {
            continue;
        }
        const std::vector<int64_t> &q = cyclotomic_poly_locked(d);
        int dq = static_cast<int>(q.size()) - 1;
        int dp = static_cast<int>(p.size()) - 1;
        std::vector<int64_t> quotient(dp - dq + 1, 0);
        for (int k = dp - dq; k >= 0; k--) {
            int64_t c = p[k + dq];
            quotient[k] = c;
            if (c != 0) {
                for (int j = 0; j <= dq; j++) {
                    p[k + j] -= c * q[j];
                }
            }
        }
        p = std::move(quotient);
    }
    return g_cyclotomic_polys().emplace(n, std::move(p)).first->second;
}

std::unique_ptr<FieldTables> build_field(int n) {
    auto f = std::make_unique<FieldTables>();
    f->n = n;
    f->phi = euler_phi(n);
    const std::vector<int64_t> &poly = cyclotomic_poly_locked(n);
    int phi = f->phi;
    f->reduce.resize(n);
    std::vector<int64_t> cur(phi, 0);
    for (int e = 0; e < n; e++) {
        if (e < phi) {
            std::fill(cur.begin(), cur.end(), 0);
            cur[e] = 1;
        } else {
            // cur holds z^(e-1); multiply by z and fold the z^phi coefficient.
            int64_t top = cur[phi - 1];
            for (int j = phi - 1; j > 0; j--) {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if (top != 0) {
                for (int j = 0; j < phi; j++) {
                    cur[j] -= top * poly[j];
                }
            }
        }
        auto &row = f->reduce[e];
        for (int j = 0; j < phi; j++) {
            if (cur[j] != 0) {
                row.emplace_back(j, cur[j]);
            }
        }
    }
    f->roots.resize(n);
    for (int e = 0; e < n; e++) {
        double a = 2.0 * std::numbers::pi * e / n;
        f->roots[e] = {std::cos(a), std::sin(a)};
    }
    for (int a = 1; a <= n; a++) {
        if (std::gcd(a, n) == 1) {
            f->units.push_back(a % n);
        }
    }
    int m = n;
    for (int p = 2; p * p <= m; p++) {
        if (m % p == 0) {
            f->primes.push_back(p);
            while (m % p == 0) {
                m /= p;
            }
        }
    }
    if (m > 1) {
        f->primes.push_back(m);
    }
    return f;
}

}  // namespace

const FieldTables &field(int n) {
    if (n < 1) {
        fail(ErrorKind::InvalidInput, "conductor must be positive");
    }
    if (n > max_conductor()) {
        fail(ErrorKind::ConductorLimitExceeded,
             "conductor " + std::to_string(n) + " exceeds limit " + std::to_string(max_conductor()));
    }
    if (n <= kDirectSlots) {
        const FieldTables *p = g_direct[n].load(std::memory_order_acquire);
        if (p != nullptr) {
            return *p;
        }
    }
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_fields().find(n);
    if (it == g_fields().end()) {
        it = g_fields().emplace(n, build_field(n)).first;
    }
    if (n <= kDirectSlots) {
        g_direct[n].store(it->second.get(), std::memory_order_release);
    }
    return *it->second;
}

namespace {

// Data for deciding membership of Q(zeta_n) values in the subfield Q(zeta_m).
struct Embedding {
    std::vector<int> pivot_rows;          // phi(m) coordinates of Q(zeta_n) used to solve
    std::vector<std::vector<Rational>> inv;  // inverse of the embedding restricted to pivot_rows
};

std::mutex g_embed_mutex;
std::map<std::pair<int, int>, std::unique_ptr<Embedding>> &g_embeddings() {
    static auto *m = new std::map<std::pair<int, int>, std::unique_ptr<Embedding>>;
    return *m;
}

std::unique_ptr<Embedding> build_embedding(int n, int m) {
    const FieldTables &fn = field(n);
    int pm = euler_phi(m);
    int pn = fn.phi;
    int step = n / m;
    // Column j is z_m^j written in the power basis of Q(zeta_n).
    std::vector<std::vector<Rational>> e(pn, std::vector<Rational>(pm));
    for (int j = 0; j < pm; j++) {
        for (auto [idx, c] : fn.reduce[(j * step) % n]) {
            e[idx][j] = Rational(c);
        }
    }
    // Gauss-Jordan on [E^T] rows to pick pm independent rows of E, then invert them.
    std::vector<int> pivots;
    std::vector<std::vector<Rational>> basis;  // reduced copies of chosen rows
    std::vector<int> basis_pivot_col;
    for (int r = 0; r < pn && static_cast<int>(pivots.size()) < pm; r++) {
        std::vector<Rational> row = e[r];
        for (size_t b = 0; b < basis.size(); b++) {
            const Rational &c = row[basis_pivot_col[b]];
            if (!c.is_zero()) {
                Rational f = c;
                for (int k = 0; k < pm; k++) {
                    if (!basis[b][k].is_zero()) {
                        row[k] -= f * basis[b][k];
                    }
                }
            }
        }
        int pc = -1;
        for (int k = 0; k < pm; k++) {
            if (!row[k].is_zero()) {
                pc = k;
                break;
            }
        }
        if (pc < 0) {
            continue;
        }
        Rational inv = row[pc].inverse();
        for (auto &x : row) {
            x *= inv;
        }
        for (auto &b : basis) {
            const Rational c = b[pc];
            if (!c.is_zero()) {
                for (int k = 0; k < pm; k++) {
                    b[k] -= c * row[k];
                }
            }
        }
        basis.push_back(std::move(row));
        basis_pivot_col.push_back(pc);
        pivots.push_back(r);
    }
    auto out = std::make_unique<Embedding>();
    out->pivot_rows = pivots;
    // Invert the square matrix S = E[pivots, :].
    int k = pm;
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k));
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            a[i][j] = e[pivots[i]][j];
        }
        a[i][k + i] = Rational(1);
    }
    for (int col = 0; col < k; col++) {
        int piv = col;
        while (a[piv][col].is_zero()) {
            piv++;
        }
        std::swap(a[piv], a[col]);
        Rational inv = a[col][col].inverse();
        for (auto &x : a[col]) {
            x *= inv;
        }
        for (int i = 0; i < k; i++) {
            if (i != col && !a[i][col].is_zero()) {
                Rational f = a[i][col];
                for (int j = 0; j < 2 * k; j++) {
                    if (!a[col][j].is_zero()) {
                        a[i][j] -= f * a[col][j];
                    }
                }
            }
        }
    }
    out->inv.assign(k, std::vector<Rational>(k));
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            out->inv[i][j] = a[i][k + j];
        }
    }
    return out;
}

const Embedding &embedding(int n, int m) {
    std::lock_guard<std::mutex> lock(g_embed_mutex);
    auto key = std::make_pair(n, m);
    auto it = g_embeddings().find(key);
    if (it == g_embeddings().end()) {
        it = g_embeddings().emplace(key, build_embedding(n, m)).first;
    }
    return *it->second;
}

}  // namespace

}  // namespace detail

// Accumulates raw exponent/coefficient pairs at a fixed conductor and folds them
// into the power basis once at the end.
class CycloAccumulator {
   public:
    explicit CycloAccumulator(int n) : f_(detail::field(n)) {
        auto &s = scratch();
        if (static_cast<int>(s.raw.size()) < f_.n) {
            s.raw.resize(f_.n);
            s.used.resize(f_.n, 0);
        }
        if (static_cast<int>(s.out.size()) < f_.phi) {
            s.out.resize(f_.phi);
        }
    }

    void add_raw(int e, const Rational &c) {
        auto &s = scratch();
        if (!s.used[e]) {
            s.used[e] = 1;
            s.touched.push_back(e);
        }
        s.raw[e] += c;
    }

    void add_raw_product(int e, const Rational &a, const Rational &b) {
        auto &s = scratch();
        if (!s.used[e]) {
            s.used[e] = 1;
            s.touched.push_back(e);
        }
        s.raw[e].add_product(a, b);
    }

    Cyclo take() {
        auto &s = scratch();
        int phi = f_.phi;
        for (int e : s.touched) {
            s.used[e] = 0;
            Rational &c = s.raw[e];
            if (c.is_zero()) {
                continue;
            }
            if (e < phi) {
                s.out[e] += c;
            } else {
                for (auto [j, k] : f_.reduce[e]) {
                    s.out[j].add_product(c, Rational(static_cast<long long>(k)));
                }
            }
            c = Rational();
        }
        s.touched.clear();
        std::vector<CycloTerm> terms;
        for (int j = 0; j < phi; j++) {
            if (!s.out[j].is_zero()) {
                terms.push_back({j, std::move(s.out[j])});
                s.out[j] = Rational();
            }
        }
        return Cyclo(f_.n, std::move(terms));
    }

    const detail::FieldTables &field() const {
        return f_;
    }

   private:
    struct Scratch {
        std::vector<Rational> raw;
        std::vector<char> used;
        std::vector<int> touched;
        std::vector<Rational> out;
    };
    static Scratch &scratch() {
        thread_local Scratch s;
        return s;
    }
    const detail::FieldTables &f_;
};

Cyclo::Cyclo(Rational r) {
    if (!r.is_zero()) {
        terms_.push_back({0, std::move(r)});
    }
}

std::optional<Rational> Cyclo::as_rational() const {
    if (terms_.empty()) {
        return Rational();
    }
    if (is_rational()) {
        return terms_[0].coeff;
    }
    return std::nullopt;
}

Cyclo Cyclo::root_of_unity(int n, long long k) {
    if (n < 1) {
        fail(ErrorKind::InvalidInput, "root of unity order must be positive");
    }
    long long kk = ((k % n) + n) % n;
    int g = std::gcd(static_cast<int>(kk), n);
    int m = n / g;
    int e = static_cast<int>(kk / g);
    if (m % 4 == 2) {
        // zeta_{2j}^e = -zeta_j^(e') with j odd.
        int j = m / 2;
        int e2 = static_cast<int>(((static_cast<long long>(e) - j) % m + m) % m) / 2;
        // zeta_m^e = -zeta_m^(e - j) and e - j is even, so this is -zeta_j^((e-j)/2).
        Cyclo r = root_of_unity(j, e2);
        return -r;
    }
    CycloAccumulator acc(m);
    acc.add_raw(e, Rational(1));
    return acc.take();
}

Cyclo Cyclo::lifted(int m) const {
    if (m == n_) {
        return *this;
    }
    if (is_rational()) {
        detail::field(m);
        return Cyclo(m, terms_);
    }
    if (m % n_ != 0) {
        fail(ErrorKind::InvalidInput,
             "cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
    }
    int step = m / n_;
    CycloAccumulator acc(m);
    for (const auto &t : terms_) {
        acc.add_raw(t.exp * step, t.coeff);
    }
    return acc.take();
}

Cyclo Cyclo::canonical() const {
    if (terms_.empty()) {
        return Cyclo();
    }
    if (is_rational()) {
        return Cyclo(terms_[0].coeff);
    }
    Cyclo v = *this;
    bool changed = true;
    while (changed && v.n_ > 1) {
        changed = false;
        const auto &primes = detail::field(v.n_).primes;
        for (int p : primes) {
            int m = v.n_ / p;
            const auto &emb = detail::embedding(v.n_, m);
            int pm = static_cast<int>(emb.pivot_rows.size());
            std::vector<Rational> rhs(pm);
            {
                size_t t = 0;
                for (int i = 0; i < pm; i++) {
                    int row = emb.pivot_rows[i];
                    while (t < v.terms_.size() && v.terms_[t].exp < row) {
                        t++;
                    }
                    if (t < v.terms_.size() && v.terms_[t].exp == row) {
                        rhs[i] = v.terms_[t].coeff;
                    }
                }
            }
            std::vector<CycloTerm> sub;
            for (int i = 0; i < pm; i++) {
                Rational c;
                for (int j = 0; j < pm; j++) {
                    if (!emb.inv[i][j].is_zero() && !rhs[j].is_zero()) {
                        c.add_product(emb.inv[i][j], rhs[j]);
                    }
                }
                if (!c.is_zero()) {
                    sub.push_back({i, std::move(c)});
                }
            }
            Cyclo candidate(m, std::move(sub));
            if (candidate.lifted(v.n_).raw_equal(v)) {
                v = std::move(candidate);
                if (v.is_rational()) {
                    return Cyclo(v.terms_[0].coeff);
                }
                changed = true;
                break;
            }
        }
    }
    return v;
}

Cyclo Cyclo::galois(long long a) const {
    long long aa = ((a % n_) + n_) % n_;
    if (std::gcd(static_cast<long long>(n_), aa) != 1 && n_ > 1) {
        fail(ErrorKind::InvalidInput, "galois exponent not a unit");
    }
    if (is_rational() || n_ <= 2) {
        return *this;
    }
    CycloAccumulator acc(n_);
    for (const auto &t : terms_) {
        acc.add_raw(static_cast<int>((t.exp * aa) % n_), t.coeff);
    }
    return acc.take();
}

Cyclo Cyclo::conj() const {
    return galois(n_ - 1);
}

Cyclo Cyclo::inverse() const {
    if (terms_.empty()) {
        fail(ErrorKind::DivisionByZero, "inverse of zero cyclotomic");
    }
    if (is_rational()) {
        return Cyclo(n_, {{0, terms_[0].coeff.inverse()}});
    }
    if (terms_.size() == 1) {
        CycloAccumulator acc(n_);
        acc.add_raw((n_ - terms_[0].exp) % n_, terms_[0].coeff.inverse());
        return acc.take();
    }
    // 1/a = (prod of the other conjugates) / norm(a).
    const auto &units = detail::field(n_).units;
    Cyclo prod(Rational(1));
    for (int u : units) {
        if (u == 1) {
            continue;
        }
        prod *= galois(u);
    }
    Cyclo norm = *this * prod;
    auto r = norm.as_rational();
    if (!r || r->is_zero()) {
        fail(ErrorKind::DivisionByZero, "norm computation failed");
    }
    return prod.lifted(n_).scaled(r->inverse());
}

Cyclo Cyclo::pow(long long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Cyclo result = Cyclo(Rational(1)).lifted(n_);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto &t : r.terms_) {
        t.coeff = -t.coeff;
    }
    return r;
}

Cyclo Cyclo::scaled(const Rational &r) const {
    if (r.is_zero()) {
        return Cyclo(n_, {});
    }
    Cyclo out = *this;
    for (auto &t : out.terms_) {
        t.coeff *= r;
    }
    return out;
}

Cyclo &Cyclo::operator+=(const Cyclo &o) {
    if (o.terms_.empty()) {
        return *this;
    }
    if (n_ != o.n_) {
        int m = std::lcm(n_, o.n_);
        if (terms_.empty()) {
            *this = o.lifted(m);
            return *this;
        }
        if (m != n_) {
            *this = lifted(m);
        }
        if (m != o.n_) {
            return *this += o.lifted(m);
        }
    }
    std::vector<CycloTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0;
    size_t j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j >= o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i >= terms_.size() || o.terms_[j].exp < terms_[i].exp) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = std::move(terms_[i].coeff);
            c += o.terms_[j].coeff;
            if (!c.is_zero()) {
                out.push_back({terms_[i].exp, std::move(c)});
            }
            i++;
            j++;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Cyclo &Cyclo::operator-=(const Cyclo &o) {
    return *this += -o;
}

Cyclo operator*(const Cyclo &a, const Cyclo &b) {
    if (a.terms_.empty() || b.terms_.empty()) {
        return Cyclo(std::lcm(a.n_, b.n_), {});
    }
    if (a.is_rational() && b.n_ % a.n_ == 0) {
        return b.scaled(a.terms_[0].coeff);
    }
    if (b.is_rational() && a.n_ % b.n_ == 0) {
        return a.scaled(b.terms_[0].coeff);
    }
    return sum_of_products({{&a, &b}});
}

Cyclo sum_of_products(const std::vector<std::pair<const Cyclo *, const Cyclo *>> &pairs) {
    int n = 1;
    for (const auto &[a, b] : pairs) {
        if (a->is_zero() || b->is_zero()) {
            continue;
        }
        n = std::lcm(n, std::lcm(a->conductor(), b->conductor()));
    }
    CycloAccumulator acc(n);
    for (const auto &[a, b] : pairs) {
        if (a->is_zero() || b->is_zero()) {
            continue;
        }
        // Raw exponents at conductor n; the fold in take() reduces them.
        int sa = n / a->conductor();
        int sb = n / b->conductor();
        for (const auto &ta : a->terms()) {
            int ea = ta.exp * sa;
            for (const auto &tb : b->terms()) {
                int e = ea + tb.exp * sb;
                if (e >= n) {
                    e -= n;
                }
                acc.add_raw_product(e, ta.coeff, tb.coeff);
            }
        }
    }
    return acc.take();
}

Cyclo &Cyclo::operator*=(const Cyclo &o) {
    *this = *this * o;
    return *this;
}

Cyclo &Cyclo::operator/=(const Cyclo &o) {
    *this = *this * o.inverse();
    return *this;
}

bool Cyclo::operator==(const Cyclo &o) const {
    if (terms_.empty() || o.terms_.empty()) {
        return terms_.empty() && o.terms_.empty();
    }
    if (n_ == o.n_) {
        return raw_equal(o);
    }
    if (is_rational() && o.is_rational()) {
        return terms_[0].coeff == o.terms_[0].coeff;
    }
    int m = std::lcm(n_, o.n_);
    return lifted(m).raw_equal(o.lifted(m));
}

bool Cyclo::raw_equal(const Cyclo &o) const noexcept {
    if (terms_.size() != o.terms_.size()) {
        return false;
    }
    if (terms_.empty()) {
        return true;
    }
    if (n_ != o.n_ && !(is_rational() && o.is_rational())) {
        return false;
    }
    for (size_t i = 0; i < terms_.size(); i++) {
        if (terms_[i].exp != o.terms_[i].exp || !(terms_[i].coeff == o.terms_[i].coeff)) {
            return false;
        }
    }
    return true;
}

std::size_t Cyclo::raw_hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto &t : terms_) {
        h ^= static_cast<std::size_t>(t.exp) * 0x100000001B3ULL;
        h = (h << 7) ^ (h >> 3) ^ t.coeff.hash();
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::complex<double> Cyclo::to_complex() const {
    if (terms_.empty()) {
        return {0.0, 0.0};
    }
    const auto &f = detail::field(n_);
    std::complex<double> z = 0;
    for (const auto &t : terms_) {
        z += t.coeff.to_double() * f.roots[t.exp];
    }
    return z;
}

std::optional<std::pair<int, int>> Cyclo::root_of_unity_exponent() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    std::complex<double> z = to_complex();
    if (std::abs(std::abs(z) - 1.0) > 1e-6) {
        return std::nullopt;
    }
    int m0 = n_ % 2 == 0 ? n_ : 2 * n_;
    double t = std::arg(z) / (2.0 * std::numbers::pi);
    long long k = std::llround(t * m0);
    k = ((k % m0) + m0) % m0;
    if (!(root_of_unity(m0, k) == *this)) {
        return std::nullopt;
    }
    int g = std::gcd(static_cast<int>(k), m0);
    return std::make_pair(static_cast<int>(k / g), m0 / g);
}

std::string Cyclo::str() const {
    Cyclo c = canonical();
    if (c.terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : c.terms_) {
        std::string piece;
        if (t.exp == 0) {
            piece = t.coeff.str();
        } else {
            std::string w = "w" + std::to_string(c.n_) + "^" + std::to_string(t.exp);
            if (t.coeff.is_one()) {
                piece = w;
            } else if (t.coeff == Rational(-1)) {
                piece = "-" + w;
            } else {
                piece = t.coeff.str() + "*" + w;
            }
        }
        if (first) {
            out = piece;
            first = false;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

namespace {

class Parser {
   public:
    explicit Parser(std::string_view s) : s_(s) {
    }

    Cyclo parse_all() {
        Cyclo v = expr();
        skip();
        if (pos_ != s_.size()) {
            error("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return v;
    }

   private:
    [[noreturn]] void error(const std::string &msg) {
        fail(ErrorKind::ParseError,
             "in cyclotomic literal '" + std::string(s_) + "' at column " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            pos_++;
        }
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip();
        size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            pos_++;
        }
        if (b == pos_) {
            error("expected digits");
        }
        return std::string(s_.substr(b, pos_ - b));
    }

    Cyclo expr() {
        Cyclo v = term();
        while (true) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    Cyclo term() {
        Cyclo v = factor();
        while (eat('*')) {
            v *= factor();
        }
        return v;
    }

    Cyclo factor() {
        if (eat('-')) {
            return -factor();
        }
        if (eat('+')) {
            return factor();
        }
        return primary();
    }

    Cyclo primary() {
        skip();
        if (pos_ >= s_.size()) {
            error("unexpected end of input");
        }
        char c = s_[pos_];
        if (c == '(') {
            pos_++;
            Cyclo v = expr();
            if (!eat(')')) {
                error("expected ')'");
            }
            return v;
        }
        if (c == 'i') {
            pos_++;
            return Cyclo::root_of_unity(4, 1);
        }
        if (c == 'w') {
            pos_++;
            std::string n = digits();
            long long nn = std::stoll(n);
            if (nn < 1 || nn > max_conductor()) {
                if (nn < 1) {
                    error("root order must be positive");
                }
                fail(ErrorKind::ConductorLimitExceeded, "literal w" + n + " exceeds conductor limit");
            }
            long long k = 1;
            if (eat('^')) {
                bool neg = eat('-');
                std::string ks = digits();
                if (ks.size() > 15) {
                    error("exponent too large");
                }
                k = std::stoll(ks);
                if (neg) {
                    k = -k;
                }
            }
            return Cyclo::root_of_unity(static_cast<int>(nn), k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string lit = num;
            size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                pos_++;
                skip();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    lit += "/" + digits();
                } else {
                    error("expected denominator");
                }
            } else {
                pos_ = save;
            }
            return Cyclo(Rational::parse(lit));
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

Cyclo Cyclo::parse(std::string_view text) {
    return Parser(text).parse_all();
}

}  // namespace gencliff
