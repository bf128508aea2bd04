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

#include "gencliff/normaliser.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gencliff/error.hpp"
#include "gencliff/linalg.hpp"

namespace gencliff {

namespace {

constexpr double kTraceTol = 1e-6;

// Solutions of N U = U' N inside span(basis).
std::vector<CMatrix> refine(const std::vector<CMatrix> &basis, const CMatrix &u, const CMatrix &up) {
    int d = u.dim();
    std::size_t k = basis.size();
    CycloRows rows(static_cast<std::size_t>(d) * d, std::vector<Cyclo>(k));
    for (std::size_t b = 0; b < k; b++) {
        CMatrix r = basis[b] * u - up * basis[b];
        for (std::size_t e = 0; e < rows.size(); e++) {
            rows[e][b] = r.entries()[e];
        }
    }
    CycloRows ns = nullspace(std::move(rows), static_cast<int>(k));
    std::vector<CMatrix> out;
    out.reserve(ns.size());
    for (const auto &v : ns) {
        CMatrix m(d);
        for (std::size_t b = 0; b < k; b++) {
            if (!v[b].is_zero()) {
                m = m + (v[b].is_one() ? basis[b] : basis[b].scaled(v[b]));
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<CMatrix> unit_basis(int d) {
    std::vector<CMatrix> out;
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            CMatrix m(d);
            m(a, b) = Cyclo(1);
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::complex<double> trace_of_product(const ComplexMatrix &x, const ComplexMatrix &y) {
    std::complex<double> t = 0;
    for (int a = 0; a < x.dim; a++) {
        for (int b = 0; b < x.dim; b++) {
            t += x(a, b) * y(b, a);
        }
    }
    return t;
}

std::optional<ComplexMatrix> numeric_inverse(const ComplexMatrix &m) {
    Eigen::MatrixXcd e(m.dim, m.dim);
    for (int r = 0; r < m.dim; r++) {
        for (int c = 0; c < m.dim; c++) {
            e(r, c) = m(r, c);
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(e);
    if (!lu.isInvertible()) {
        return std::nullopt;
    }
    Eigen::MatrixXcd inv = lu.inverse();
    ComplexMatrix out(m.dim);
    for (int r = 0; r < m.dim; r++) {
        for (int c = 0; c < m.dim; c++) {
            out(r, c) = inv(r, c);
        }
    }
    return out;
}

std::size_t numeric_key(const ComplexMatrix &m) {
    std::size_t h = 1469598103934665603ULL;
    for (const auto &z : m.a) {
        for (double v : {z.real(), z.imag()}) {
            auto q = static_cast<long long>(std::llround(v * 1e5));
            h = (h ^ static_cast<std::size_t>(q)) * 1099511628211ULL;
        }
    }
    return h;
}

struct VecHash {
    std::size_t operator()(const std::vector<std::size_t> &v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
            h = h * 0x9E3779B97F4A7C15ULL + x;
            h ^= h >> 31;
        }
        return h;
    }
};

// Element discovery order over a generator subset: (element, parent, generator).
struct SubsetTree {
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> gen;
};

SubsetTree subset_tree(const MatrixGroup &g, const std::vector<std::size_t> &subset) {
    SubsetTree t;
    std::vector<char> seen(g.order(), 0);
    t.parent.assign(g.order(), 0);
    t.gen.assign(g.order(), 0);
    std::deque<std::size_t> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        t.order.push_back(x);
        for (std::size_t s : subset) {
            std::size_t y = g.right_multiply(x, s);
            if (!seen[y]) {
                seen[y] = 1;
                t.parent[y] = x;
                t.gen[y] = s;
                q.push_back(y);
            }
        }
    }
    return t;
}

// A normaliser together with the automorphism it induces, as element indices.
struct Found {
    CMatrix n;
    std::vector<std::size_t> conj;
};

class Search {
   public:
    Search(const MatrixGroup &g, const NormaliserOptions &o, SearchStats &stats) : g_(g), opt_(o), stats_(stats) {
    }

    // Returns false when the group is scalar (every matrix normalises it).
    bool run(std::vector<Found> &out, std::vector<std::string> &notes) {
        reduced_ = reduced_generator_set(g_);
        for (std::size_t t : reduced_) {
            if (!g_.generators()[t].scalar_value()) {
                search_.push_back(t);
            }
        }
        if (search_.empty()) {
            return false;
        }
        irreducible_ = g_.is_irreducible();
        tree_ = subset_tree(g_, reduced_);
        for (std::size_t i = 0; i < g_.order(); i++) {
            numeric_index_[numeric_key(g_.approx(i))].push_back(i);
        }
        std::size_t k = search_.size();
        u_.resize(k);
        pair_trace_.assign(k, std::vector<std::complex<double>>(k));
        cands_.resize(k);
        for (std::size_t j = 0; j < k; j++) {
            u_[j] = g_.generator_index(search_[j]);
        }
        for (std::size_t j = 0; j < k; j++) {
            for (std::size_t i = 0; i < j; i++) {
                pair_trace_[i][j] = trace_of_product(g_.approx(u_[i]), g_.approx(u_[j]));
            }
            int ord = g_.element_order(u_[j]);
            std::complex<double> tr = g_.approx_trace(u_[j]);
            const auto &same_order = g_.elements_of_order(ord);
            stats_.pruned_order += g_.order() - same_order.size();
            for (std::size_t c : same_order) {
                if (std::abs(g_.approx_trace(c) - tr) > kTraceTol) {
                    stats_.pruned_trace++;
                    continue;
                }
                cands_[j].push_back(c);
            }
        }
        // Composing with inner automorphisms moves the first image around its class.
        cands_[0] = g_.class_representatives(cands_[0]);
        images_.assign(k, 0);
        dfs(0, unit_basis(g_.dim()));
        for (auto &f : found_) {
            out.push_back(std::move(f));
        }
        if (!irreducible_) {
            notes.push_back("group is reducible; normaliser representatives may be incomplete");
        }
        for (auto &n : notes_) {
            notes.push_back(n);
        }
        return true;
    }

    const std::vector<std::size_t> &reduced() const {
        return reduced_;
    }
    const SubsetTree &tree() const {
        return tree_;
    }

   private:
    void count_candidate() {
        if (++stats_.candidates > opt_.max_assignments) {
            fail(ErrorKind::SearchBudgetExceeded,
                 "normaliser search tried more than " + std::to_string(opt_.max_assignments) + " candidate images for " +
                     (g_.name().empty() ? "the group" : g_.name()));
        }
    }

    void dfs(std::size_t j, const std::vector<CMatrix> &basis) {
        if (j == search_.size()) {
            leaf(basis);
            return;
        }
        if (basis.size() == 1) {
            pinned(j, basis[0]);
            return;
        }
        const CMatrix &u = g_.element(u_[j]);
        for (std::size_t c : cands_[j]) {
            count_candidate();
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; i++) {
                std::complex<double> t = trace_of_product(g_.approx(images_[i]), g_.approx(c));
                ok = std::abs(t - pair_trace_[i][j]) <= kTraceTol;
            }
            if (!ok) {
                stats_.pruned_trace++;
                continue;
            }
            auto next = refine(basis, u, g_.element(c));
            if (next.empty()) {
                stats_.empty_nullspace++;
                continue;
            }
            if (irreducible_ && next.size() > 1 && j + 1 == search_.size()) {
                fail(ErrorKind::InvalidInput, "Schur bound violated: intertwiner space of dimension " +
                                                  std::to_string(next.size()) + " for an irreducible group");
            }
            images_[j] = c;
            dfs(j + 1, next);
        }
    }

    // The null space is one-dimensional: N is fixed, and the remaining images follow.
    void pinned(std::size_t j, const CMatrix &n) {
        if (n.determinant().is_zero()) {
            stats_.singular++;
            return;
        }
        ComplexMatrix na = n.approx();
        auto na_inv = numeric_inverse(na);
        std::optional<CMatrix> exact_inv;
        for (std::size_t k = j; k < search_.size(); k++) {
            count_candidate();
            const CMatrix &u = g_.element(u_[k]);
            CMatrix nu = n * u;
            std::optional<std::size_t> hit;
            if (na_inv) {
                ComplexMatrix w = na * g_.approx(u_[k]) * *na_inv;
                auto it = numeric_index_.find(numeric_key(w));
                if (it != numeric_index_.end()) {
                    for (std::size_t c : it->second) {
                        if (max_abs_diff(g_.approx(c), w) < 1e-7 && nu == g_.element(c) * n) {
                            hit = c;
                            break;
                        }
                    }
                }
            }
            if (!hit) {
                // Rounding can split a value across grid cells; settle it exactly.
                if (!exact_inv) {
                    exact_inv = n.inverse();
                }
                hit = g_.find(nu * *exact_inv);
            }
            if (!hit) {
                stats_.empty_nullspace++;
                return;
            }
            images_[k] = *hit;
        }
        leaf({n});
    }

    void leaf(const std::vector<CMatrix> &basis) {
        std::optional<CMatrix> n;
        if (basis.size() == 1) {
            n = basis[0];
        } else {
            // Only reachable for reducible groups: look for an invertible intertwiner.
            CMatrix sum(g_.dim());
            for (const auto &b : basis) {
                if (!b.determinant().is_zero()) {
                    n = b;
                    break;
                }
                sum = sum + b;
            }
            if (!n && !sum.determinant().is_zero()) {
                n = sum;
            }
        }
        if (!n || n->determinant().is_zero()) {
            stats_.singular++;
            return;
        }
        stats_.leaves++;
        if (seen_.count(images_)) {
            stats_.duplicates++;
            return;
        }
        // Every N g with g in G lands on a simultaneous conjugate of this assignment.
        const auto &comm = g_.commutant(images_[0]);
        for (std::size_t x = 0; x < g_.order(); x++) {
            if (!comm[x]) {
                continue;
            }
            std::size_t xi = g_.inverse(x);
            std::vector<std::size_t> key(images_.size());
            for (std::size_t i = 0; i < images_.size(); i++) {
                key[i] = g_.multiply(g_.multiply(x, images_[i]), xi);
            }
            seen_.insert(std::move(key));
        }
        Found f;
        f.n = n->projective_normal_form().first;
        f.conj = induced_automorphism();
        found_.push_back(std::move(f));
    }

    std::vector<std::size_t> induced_automorphism() const {
        std::vector<std::size_t> img_of_gen(g_.num_generators());
        for (std::size_t t : reduced_) {
            img_of_gen[t] = g_.generator_index(t);  // scalars are fixed
        }
        for (std::size_t j = 0; j < search_.size(); j++) {
            img_of_gen[search_[j]] = images_[j];
        }
        std::vector<std::size_t> conj(g_.order(), 0);
        for (std::size_t x : tree_.order) {
            if (x != 0) {
                conj[x] = g_.multiply(conj[tree_.parent[x]], img_of_gen[tree_.gen[x]]);
            }
        }
        return conj;
    }

    const MatrixGroup &g_;
    const NormaliserOptions &opt_;
    SearchStats &stats_;
    std::vector<std::size_t> reduced_;
    std::vector<std::size_t> search_;
    bool irreducible_ = true;
    SubsetTree tree_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> numeric_index_;
    std::vector<std::size_t> u_;
    std::vector<std::vector<std::complex<double>>> pair_trace_;
    std::vector<std::vector<std::size_t>> cands_;
    std::vector<std::size_t> images_;
    std::unordered_set<std::vector<std::size_t>, VecHash> seen_;
    std::vector<Found> found_;
    std::vector<std::string> notes_;
};

// N x = conj(x) N for every element x.
bool verify_linear(const MatrixGroup &g, const Found &f) {
    for (std::size_t x = 0; x < g.order(); x++) {
        if (!(f.n * g.element(x) == g.element(f.conj[x]) * f.n)) {
            return false;
        }
    }
    return true;
}

// Representatives of G / Z(G).
std::vector<std::size_t> central_transversal(const MatrixGroup &g) {
    std::vector<char> covered(g.order(), 0);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.order(); x++) {
        if (covered[x]) {
            continue;
        }
        out.push_back(x);
        for (std::size_t z : g.centre()) {
            covered[g.multiply(x, z)] = 1;
        }
    }
    return out;
}

// Linear normalisers of `searched`, as verified representatives (or every coset when expanding).
std::vector<Found> search_group(const MatrixGroup &searched, const NormaliserOptions &options,
                                NormaliserReport &report, bool &degenerate) {
    Search s(searched, options, report.stats);
    std::vector<Found> reps;
    degenerate = !s.run(reps, report.notes);
    if (degenerate) {
        return {};
    }
    std::vector<Found> verified;
    for (auto &f : reps) {
        if (verify_linear(searched, f)) {
            verified.push_back(std::move(f));
        } else {
            report.notes.push_back("dropped unverified candidate " + f.n.str());
        }
    }
    auto transversal = central_transversal(searched);
    report.assignment_count = verified.size() * transversal.size();
    if (!options.expand_inner) {
        return verified;
    }
    std::vector<Found> expanded;
    for (const auto &f : verified) {
        for (std::size_t x : transversal) {
            Found e;
            e.n = (f.n * searched.element(x)).projective_normal_form().first;
            std::size_t xi = searched.inverse(x);
            e.conj.resize(searched.order());
            for (std::size_t y = 0; y < searched.order(); y++) {
                e.conj[y] = f.conj[searched.multiply(searched.multiply(x, y), xi)];
            }
            if (!verify_linear(searched, e)) {
                fail(ErrorKind::InvalidInput, "expanded normaliser failed verification");
            }
            expanded.push_back(std::move(e));
        }
    }
    return expanded;
}

void mark_degenerate(NormaliserReport &report, int dim) {
    report.degenerate = true;
    report.found.push_back({CMatrix::identity(dim), {}, std::nullopt, false, true});
    report.assignment_count = 1;
    report.notes.push_back("scalar group: every invertible matrix normalises it; only the identity is listed");
}

Target target_of(const MatrixGroup &g) {
    return g.tensor_base() != nullptr ? Target::GTensorG : Target::G;
}

bool is_two_qubit_dim(int d) {
    return d == 4;
}

}  // namespace

std::vector<CMatrix> kron_constraint_nullspace(const std::vector<std::pair<CMatrix, CMatrix>> &pairs) {
    if (pairs.empty()) {
        fail(ErrorKind::InvalidInput, "no constraint pairs given");
    }
    int d = pairs[0].first.dim();
    for (const auto &[u, up] : pairs) {
        if (u.dim() != d || up.dim() != d) {
            fail(ErrorKind::DimensionMismatch, "constraint pairs must share one dimension");
        }
    }
    std::vector<CMatrix> basis = unit_basis(d);
    for (const auto &[u, up] : pairs) {
        basis = refine(basis, u, up);
        if (basis.empty()) {
            break;
        }
    }
    for (auto &b : basis) {
        b = b.projective_normal_form().first;
    }
    return basis;
}

Cyclo PhaseFunction::value(std::size_t t) const {
    return Cyclo::root_of_unity(moduli.at(t), exponents.at(t));
}

bool PhaseFunction::is_trivial() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

std::vector<PhaseFunction> compute_phase_functions(const MatrixGroup &group) {
    std::size_t r = group.num_generators();
    int s = static_cast<int>(group.scalars().size());
    std::vector<int> ord(r);
    long long l = 1;
    double space = 1;
    for (std::size_t t = 0; t < r; t++) {
        ord[t] = group.element_order(group.generator_index(t));
        l = std::lcm(l, static_cast<long long>(ord[t]));
        space *= ord[t];
    }
    if (space > 1e7) {
        fail(ErrorKind::SearchBudgetExceeded, "phase function space too large");
    }
    // Exponent-count vectors of the spanning-tree words.
    std::vector<std::vector<long long>> path(group.order(), std::vector<long long>(r, 0));
    for (std::size_t i = 1; i < group.order(); i++) {
        for (std::size_t t : group.word(i)) {
            path[i][t]++;
        }
    }
    // A word whose value is scalar must pick up a phase in <w_s>. Those words are spanned
    // by the Schreier relators and one word per scalar element; store each as its
    // integer weights sum_t a_t * (l / n_t), to be tested mod l.
    std::set<std::vector<long long>> rel;
    auto add = [&](std::vector<long long> v) {
        for (std::size_t t = 0; t < r; t++) {
            v[t] = ((v[t] % ord[t]) + ord[t]) % ord[t] * (l / ord[t]);
        }
        if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) {
            rel.insert(std::move(v));
        }
    };
    for (std::size_t i = 0; i < group.order(); i++) {
        for (std::size_t t = 0; t < r; t++) {
            std::size_t j = group.right_multiply(i, t);
            std::vector<long long> v = path[i];
            v[t]++;
            for (std::size_t k = 0; k < r; k++) {
                v[k] -= path[j][k];
            }
            add(std::move(v));
        }
    }
    for (std::size_t z : group.scalars()) {
        add(path[z]);
    }
    std::vector<PhaseFunction> out;
    std::vector<int> j(r, 0);
    while (true) {
        bool ok = true;
        for (const auto &v : rel) {
            long long sum = 0;
            for (std::size_t t = 0; t < r; t++) {
                sum += v[t] * j[t];
            }
            if (sum % l != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            PhaseFunction f;
            f.exponents = j;
            for (std::size_t t = 0; t < r; t++) {
                f.moduli.push_back(ord[t] * s);
            }
            out.push_back(std::move(f));
        }
        std::size_t t = r;
        while (t > 0) {
            t--;
            if (++j[t] < ord[t]) {
                break;
            }
            j[t] = 0;
            if (t == 0) {
                return out;
            }
        }
        if (r == 0) {
            return out;
        }
    }
}

int phase_extension_order(const MatrixGroup &group, const std::vector<PhaseFunction> &phases) {
    int k = static_cast<int>(group.scalars().size());
    for (const auto &f : phases) {
        for (std::size_t t = 0; t < f.exponents.size(); t++) {
            int m = f.moduli[t];
            k = std::lcm(k, m / std::gcd(m, f.exponents[t]));
        }
    }
    return k;
}

bool is_entangling(const CMatrix &v) {
    int big = v.dim();
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(big))));
    if (d * d != big || d < 2) {
        fail(ErrorKind::NotSquareOfSquare,
             "matrix dimension " + std::to_string(big) + " is not the square of an integer >= 2");
    }
    // Product form holds iff V_{ij,kl} V_{i'j',k'l'} = V_{ij',kl'} V_{i'j,k'l} for all
    // indices, i.e. the reshuffle R[(i,k),(j,l)] has every 2x2 minor zero. For
    // SWAP (A (x) B) the reshuffle is R[(j,k),(i,l)] instead.
    auto rank_one = [&](bool swapped) {
        auto at = [&](int p, int q) -> const Cyclo & {
            int a = p / d;
            int b = p % d;
            int c = q / d;
            int e = q % d;
            return swapped ? v(c * d + a, b * d + e) : v(a * d + c, b * d + e);
        };
        int n = d * d;
        int pr = -1;
        int pc = -1;
        for (int p = 0; p < n && pr < 0; p++) {
            for (int q = 0; q < n; q++) {
                if (!at(p, q).is_zero()) {
                    pr = p;
                    pc = q;
                    break;
                }
            }
        }
        if (pr < 0) {
            return true;
        }
        const Cyclo &piv = at(pr, pc);
        for (int p = 0; p < n; p++) {
            for (int q = 0; q < n; q++) {
                if (!(at(p, q) * piv == at(p, pc) * at(pr, q))) {
                    return false;
                }
            }
        }
        return true;
    };
    return !(rank_one(false) || rank_one(true));
}

bool NormaliserReport::any_entangling() const {
    return std::any_of(found.begin(), found.end(), [](const NormaliserRecord &r) { return r.entangling; });
}

NormaliserReport find_normalisers(const MatrixGroup &group, const NormaliserOptions &options) {
    NormaliserReport report;
    report.group_name = group.name();
    report.target = target_of(group);
    report.mode = Mode::Linear;
    report.group_order = group.order();
    report.searched_order = group.order();
    report.extension_phase_order = static_cast<int>(group.scalars().size());
    report.irreducible = group.is_irreducible();
    bool degenerate = false;
    auto found = search_group(group, options, report, degenerate);
    if (degenerate) {
        mark_degenerate(report, group.dim());
        return report;
    }
    bool square = is_two_qubit_dim(group.dim());
    for (auto &f : found) {
        NormaliserRecord rec;
        for (std::size_t t = 0; t < group.num_generators(); t++) {
            rec.images.push_back(group.element(f.conj[group.generator_index(t)]));
        }
        rec.entangling = square && is_entangling(f.n);
        rec.matrix = std::move(f.n);
        rec.verified = true;
        report.found.push_back(std::move(rec));
    }
    return report;
}

NormaliserReport find_projective_normalisers(const MatrixGroup &group, const NormaliserOptions &options) {
    NormaliserReport report;
    report.group_name = group.name();
    report.target = target_of(group);
    report.mode = Mode::Projective;
    report.group_order = group.order();
    report.irreducible = group.is_irreducible();
    if (group.is_scalar_group()) {
        report.searched_order = group.order();
        mark_degenerate(report, group.dim());
        return report;
    }
    report.phase_functions = compute_phase_functions(group);
    int k = phase_extension_order(group, report.phase_functions);
    report.extension_phase_order = k;
    int s = static_cast<int>(group.scalars().size());
    MatrixGroup ext = k == s ? group : central_extension(group, k, options.closure);
    report.searched_order = ext.order();
    bool degenerate = false;
    auto found = search_group(ext, options, report, degenerate);
    if (degenerate) {
        mark_degenerate(report, group.dim());
        return report;
    }
    bool square = is_two_qubit_dim(group.dim());
    for (auto &f : found) {
        NormaliserRecord rec;
        std::vector<Cyclo> phases;
        bool ok = true;
        // ext keeps the group's generators first, in order.
        for (std::size_t t = 0; t < group.num_generators(); t++) {
            const CMatrix &w = ext.element(f.conj[ext.generator_index(t)]);
            auto m = group.find_projective(w);
            if (!m) {
                ok = false;
                break;
            }
            rec.images.push_back(group.element(m->index));
            phases.push_back(m->scalar);
        }
        if (!ok) {
            report.notes.push_back("dropped candidate whose conjugates leave C* G: " + f.n.str());
            continue;
        }
        rec.phase_function = std::move(phases);
        rec.entangling = square && is_entangling(f.n);
        rec.matrix = std::move(f.n);
        rec.verified = true;
        report.found.push_back(std::move(rec));
    }
    return report;
}

NormaliserReport classify_entangling(const MatrixGroup &group, const NormaliserOptions &options) {
    if (!group.is_irreducible()) {
        fail(ErrorKind::NotIrreducible, (group.name().empty() ? std::string("group") : group.name()) +
                                            " is not irreducible");
    }
    MatrixGroup sq = tensor_square(group, options.closure);
    NormaliserReport report = find_projective_normalisers(sq, options);
    report.group_name = group.name();
    report.target = Target::GTensorG;
    return report;
}

bool normalises(const CMatrix &m, const MatrixGroup &group, Mode mode) {
    if (m.dim() != group.dim()) {
        fail(ErrorKind::DimensionMismatch, "gate dimension " + std::to_string(m.dim()) + " does not match group dimension " +
                                               std::to_string(group.dim()));
    }
    auto inv = m.inverse();
    if (!inv) {
        return false;
    }
    for (const auto &g : group.elements()) {
        CMatrix w = m * g * *inv;
        bool in = mode == Mode::Linear ? group.find(w).has_value() : group.find_projective(w).has_value();
        if (!in) {
            return false;
        }
    }
    return true;
}

const char *target_name(Target t) {
    return t == Target::G ? "G" : "G_tensor_G";
}

const char *mode_name(Mode m) {
    return m == Mode::Linear ? "linear" : "projective";
}

}  // namespace gencliff
