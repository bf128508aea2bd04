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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "circuit_gen.hpp"
#include "dense_oracle.hpp"
#include "gencliff/catalog.hpp"
#include "gencliff/error.hpp"
#include "gencliff/normaliser.hpp"
#include "gencliff/simulator.hpp"

namespace {

using namespace gencliff;

struct Outcome {
    bool pass = false;
    std::string detail;
};

CMatrix gate(const char *name) {
    return *named_gate(name);
}

std::string pkey(const CMatrix &m) {
    return m.projective_normal_form().first.canonical().str();
}

// Matrices modulo scalars, keyed exactly at a fixed conductor.
class ProjectiveSet {
   public:
    explicit ProjectiveSet(int conductor) : l_(conductor) {
    }
    CMatrix normal(const CMatrix &m) const {
        return m.projective_normal_form().first.canonical().lifted(l_);
    }
    bool insert(const CMatrix &n) {
        auto &b = buckets_[n.raw_hash()];
        for (const auto &x : b) {
            if (x.raw_equal(n)) {
                return false;
            }
        }
        b.push_back(n);
        size_++;
        return true;
    }
    bool contains(const CMatrix &n) const {
        auto it = buckets_.find(n.raw_hash());
        if (it == buckets_.end()) {
            return false;
        }
        return std::any_of(it->second.begin(), it->second.end(), [&](const CMatrix &x) { return x.raw_equal(n); });
    }
    std::size_t size() const {
        return size_;
    }

   private:
    int l_;
    std::size_t size_ = 0;
    std::unordered_map<std::size_t, std::vector<CMatrix>> buckets_;
};

// ---- 1 and 2 -------------------------------------------------------------

ClassificationTable &table() {
    static ClassificationTable t = classify_catalog();
    return t;
}

Outcome criterion1() {
    const auto &t = table();
    std::set<std::string> want{"tetrahedral-M1",          "tetrahedral-M2",          "tetrahedral-M3",
                               "tetrahedral-ext-72-25",   "octahedral-48-29",        "octahedral-96-192",
                               "dodecahedral-120-5-rep1", "dodecahedral-120-5-rep2", "dihedral-odd(3)",
                               "dihedral-odd(5)",         "dihedral-odd(7)",         "Gm(1)",
                               "Gm(2)",                   "Gm(3)",                   "Gm(4)"};
    std::set<std::string> seen;
    int wrong = 0;
    for (const auto &r : t.rows) {
        seen.insert(r.name);
        bool gm = r.name.rfind("Gm(", 0) == 0;
        if (r.entangling != gm || r.entangling != r.expected) {
            wrong++;
        }
    }
    std::ostringstream d;
    d << t.rows.size() << " groups, " << wrong << " wrong verdicts, entangling exactly for Gm(1..4)";
    return {wrong == 0 && seen == want, d.str()};
}

Outcome criterion2() {
    std::set<std::string> need{"tetrahedral-M1",         "tetrahedral-M2",          "tetrahedral-M3",
                               "octahedral-48-29",       "dodecahedral-120-5-rep1", "dodecahedral-120-5-rep2",
                               "dihedral-odd(3)",        "dihedral-odd(5)",         "dihedral-odd(7)"};
    int ok = 0;
    std::string bad;
    for (const auto &r : table().rows) {
        if (!need.count(r.name)) {
            continue;
        }
        if (r.phase_range_matches.value_or(false)) {
            ok++;
        } else {
            bad += " " + r.name;
        }
    }
    std::ostringstream d;
    d << ok << "/" << need.size() << " phase ranges match (w3^j, {1,i}, trivial, {1,-1} modulo centre phases)";
    if (!bad.empty()) {
        d << "; mismatched:" << bad;
    }
    return {ok == static_cast<int>(need.size()), d.str()};
}

// ---- 3 -------------------------------------------------------------------

Outcome criterion3() {
    MatrixGroup p = pauli().close().with_name("pauli");
    auto rep = find_projective_normalisers(p);

    // H and P up to phase in rep * Pauli.
    auto reached = [&](const CMatrix &target) {
        for (const auto &f : rep.found) {
            if (p.find_projective(*f.matrix.inverse() * target)) {
                return true;
            }
        }
        return false;
    };
    bool hp = reached(gate("H")) && reached(gate("P"));

    // Brute force: every image pair for (X, Z) inside <P, w8 I>, no pruning.
    auto gens = p.generators();
    gens.push_back(CMatrix::identity(2).scaled(Cyclo::root_of_unity(8, 1)));
    MatrixGroup ext = MatrixGroup::close(gens);
    std::set<std::string> brute;
    for (std::size_t a = 0; a < ext.order(); a++) {
        for (std::size_t b = 0; b < ext.order(); b++) {
            auto ns = kron_constraint_nullspace({{gate("X"), ext.element(a)}, {gate("Z"), ext.element(b)}});
            for (const auto &n : ns) {
                if (!n.determinant().is_zero() && normalises(n, p, Mode::Projective)) {
                    brute.insert(pkey(n));
                }
            }
        }
    }

    NormaliserOptions o;
    o.expand_inner = true;
    auto expanded = find_projective_normalisers(p, o);
    std::set<std::string> found;
    for (const auto &f : expanded.found) {
        found.insert(pkey(f.matrix));
    }
    std::ostringstream d;
    d << "H, P " << (hp ? "reached" : "NOT reached") << "; |PN(P)/C*| brute force " << brute.size() << ", search "
      << found.size() << " (" << rep.found.size() << " classes modulo Pauli)";
    return {hp && brute.size() == 24 && found == brute && rep.assignment_count == 24, d.str()};
}

// ---- 4 -------------------------------------------------------------------

bool in_local_cosets(const MatrixGroup &g, const NormaliserReport &rep, const CMatrix &m) {
    for (const auto &f : rep.found) {
        if (g.find_projective(*f.matrix.inverse() * m)) {
            return true;
        }
    }
    return false;
}

Outcome criterion4() {
    std::ostringstream d;
    bool ok = true;
    for (int m = 1; m <= 4; m++) {
        MatrixGroup g = gm(m).close().with_name("Gm(" + std::to_string(m) + ")");
        auto local = find_projective_normalisers(g);
        CMatrix root = CMatrix::diagonal({1, Cyclo::root_of_unity(4 * m, 1)});
        bool root_ok = normalises(root, g, Mode::Projective) && in_local_cosets(g, local, root);

        auto two = classify_entangling(g);
        MatrixGroup sq = tensor_square(g);
        CMatrix cz = gate("CZ");
        bool cz_ok = two.any_entangling() && is_entangling(cz) && normalises(cz, sq, Mode::Projective) &&
                     in_local_cosets(sq, two, cz);

        // Projective closure of <CZ, SWAP, N (x) I, I (x) N, G (x) G>.
        CMatrix id = CMatrix::identity(2);
        std::vector<CMatrix> gens{cz, swap_gate(2)};
        for (const auto &f : local.found) {
            gens.push_back(kron(f.matrix, id));
            gens.push_back(kron(id, f.matrix));
        }
        for (const auto &u : g.generators()) {
            gens.push_back(kron(u, id));
            gens.push_back(kron(id, u));
        }
        int l = 8 * m;
        for (const auto &x : gens) {
            l = std::lcm(l, x.canonical().conductor());
        }
        for (const auto &f : two.found) {
            l = std::lcm(l, f.matrix.canonical().conductor());
        }
        ProjectiveSet closure(l);
        std::vector<CMatrix> queue{closure.normal(CMatrix::identity(4))};
        closure.insert(queue[0]);
        for (std::size_t head = 0; head < queue.size() && closure.size() < 100000; head++) {
            for (const auto &x : gens) {
                CMatrix y = closure.normal(queue[head] * x);
                if (closure.insert(y)) {
                    queue.push_back(y);
                }
            }
        }
        std::size_t members = 0;
        for (const auto &f : two.found) {
            members += closure.contains(closure.normal(f.matrix)) ? 1 : 0;
        }
        bool gen_ok = members == two.found.size() && closure.size() == two.assignment_count;
        ok = ok && root_ok && cz_ok && gen_ok;
        d << (m > 1 ? "; " : "") << "m=" << m << ": Z^(1/" << 2 * m << ") " << (root_ok ? "found" : "MISSING")
          << ", CZ " << (cz_ok ? "found" : "MISSING") << ", " << members << "/" << two.found.size()
          << " reps in <CZ,SWAP,local> (order " << closure.size() << " = " << two.assignment_count << ")";
    }
    return {ok, d.str()};
}

// ---- 5 -------------------------------------------------------------------

Outcome criterion5() {
    std::ostringstream d;
    bool ok = true;
    NormaliserOptions o;
    o.expand_inner = true;
    for (int n : {3, 5, 7}) {
        auto rep = classify_entangling(dihedral_odd(n).close(), o);
        std::size_t perm = 0;
        std::size_t local = 0;
        std::size_t diag = 0;
        std::size_t diag_split = 0;
        for (const auto &f : rep.found) {
            perm += f.matrix.is_generalised_permutation() ? 1 : 0;
            local += (!f.entangling && !is_entangling(f.matrix)) ? 1 : 0;
            if (f.matrix.is_diagonal()) {
                diag++;
                diag_split += is_entangling(f.matrix) ? 0 : 1;
            }
        }
        std::size_t total = rep.found.size();
        bool this_ok = total > 0 && perm == total && local == total && diag_split == diag && diag > 0;
        ok = ok && this_ok;
        d << (n > 3 ? "; " : "") << "n=" << n << ": " << total << " normalisers, " << perm << " monomial, "
          << local << " non-entangling, " << diag_split << "/" << diag << " diagonal split";
    }
    return {ok, d.str()};
}

// ---- 6 -------------------------------------------------------------------

Outcome criterion6() {
    std::mt19937_64 rng(2026);
    std::vector<gen::GatePool> pools{gen::pauli_pool(), gen::gm2_pool()};
    int agree = 0;
    int measured = 0;
    for (int trial = 0; trial < 200; trial++) {
        const auto &pool = pools[trial % 2];
        auto spec = gen::random_spec(rng, pool, 3, 30, 1);
        auto c = Circuit::build(pool.group, spec.n_wires, spec.input, spec.gates, spec.measurements);
        measured += spec.measurements.empty() ? 0 : 1;
        auto o = gen::random_observable(rng, pool.group, spec.n_wires);
        CMatrix m = observable_matrix(c, o);
        bool same = expectation(c, o).value == oracle::expectation(c, m) &&
                    expectation(c, o, {true}).value == oracle::expectation(c, m + m.adjoint());
        agree += same ? 1 : 0;
    }
    std::ostringstream d;
    d << agree << "/200 random circuits equal the dense oracle exactly (" << measured << " with measurements)";
    return {agree == 200, d.str()};
}

// ---- 7 -------------------------------------------------------------------

Outcome criterion7() {
    MatrixGroup p = pauli().close();
    const int width = 50;
    std::mt19937_64 rng(55);
    auto make = [&](std::size_t n) {
        std::vector<Gate> gates;
        gates.reserve(n);
        const char *one[] = {"H", "P", "X", "Z"};
        const char *two[] = {"CZ", "CNOT"};
        std::vector<CMatrix> mats1, mats2;
        for (auto *s : one) {
            mats1.push_back(gate(s));
        }
        for (auto *s : two) {
            mats2.push_back(gate(s));
        }
        for (std::size_t k = 0; k < n; k++) {
            Gate g;
            if (rng() % 2 == 0) {
                g.matrix = mats1[rng() % 4];
                g.wires = {static_cast<int>(rng() % width)};
            } else {
                int a = static_cast<int>(rng() % width);
                int b = static_cast<int>(rng() % (width - 1));
                g.matrix = mats2[rng() % 2];
                g.wires = {a, b >= a ? b + 1 : b};
            }
            gates.push_back(std::move(g));
        }
        std::vector<std::vector<Cyclo>> input(width, {1, 0});
        return Circuit::build(p, width, input, std::move(gates));
    };
    Circuit small = make(100000);
    Circuit large = make(200000);
    Observable o;
    o.factors.assign(width, 0);
    o.factors[0] = p.index_of(gate("Z"));
    o.factors[width - 1] = p.index_of(gate("X"));
    auto time = [&](const Circuit &c) {
        double best = 1e100;
        for (int rep = 0; rep < 15; rep++) {
            auto t0 = std::chrono::steady_clock::now();
            Observable r = propagate(c, o);
            auto t1 = std::chrono::steady_clock::now();
            volatile std::size_t sink = r.factors[0];
            (void)sink;
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        }
        return best;
    };
    time(small);
    double ts = time(small);
    double tl = time(large);
    double ratio = tl / ts;
    char buf[160];
    std::snprintf(buf, sizeof buf, "width %d: 1e5 gates %.2f ms, 2e5 gates %.2f ms, ratio %.3f (limit 2.2)", width,
                  ts * 1e3, tl * 1e3, ratio);
    return {ratio <= 2.2, buf};
}

// ---- 8 -------------------------------------------------------------------

std::vector<Cyclo> sample_qubit(std::mt19937_64 &rng) {
    long long m = 2 + static_cast<long long>(rng() % 6);
    long long n = 1 + static_cast<long long>(rng() % (m - 1));
    long long c = m * m + n * n;
    Cyclo a(Rational(m * m - n * n, c));
    Cyclo b = Cyclo(Rational(2 * m * n, c)) * Cyclo::root_of_unity(8, static_cast<long long>(rng() % 8));
    return {a, b};
}

Outcome criterion8() {
    std::mt19937_64 rng(8);
    std::vector<std::pair<std::string, MatrixGroup>> groups{{"pauli", pauli().close()}};
    for (int m = 1; m <= 3; m++) {
        groups.emplace_back("Gm(" + std::to_string(m) + ")", gm(m).close());
    }
    std::ostringstream d;
    bool ok = true;
    for (const auto &[name, g] : groups) {
        auto povm = build_teleportation_povm(g);
        int good = 0;
        for (int k = 0; k < 5; k++) {
            good += verify_teleportation(povm, g, sample_qubit(rng)).all_ok() ? 1 : 0;
        }
        bool this_ok = povm.complete && povm.rank_one && good == 5;
        ok = ok && this_ok;
        d << (name == "pauli" ? "" : "; ") << name << ": " << povm.elements.size() << " elements, sum "
          << (povm.complete ? "= I" : "!= I") << ", " << good << "/5 states teleported with p = 1/|G|";
    }
    return {ok, d.str()};
}

// ---- 9 -------------------------------------------------------------------

Cyclo random_cyclo(std::mt19937_64 &rng) {
    static const int conductors[] = {1, 3, 4, 5, 8, 12, 15, 24};
    int n = conductors[rng() % 8];
    Cyclo x(0);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; t++) {
        long long num = static_cast<long long>(rng() % 19) - 9;
        long long den = 1 + static_cast<long long>(rng() % 7);
        x += Cyclo::root_of_unity(n, static_cast<long long>(rng() % n)).scaled(Rational(num, den));
    }
    return x;
}

Outcome criterion9() {
    const int cases = 1000;
    std::mt19937_64 rng(9);
    int field = 0;
    for (int k = 0; k < cases; k++) {
        Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                  a * b == b * a && a - a == Cyclo(0) && (a * b).conj() == a.conj() * b.conj();
        if (!a.is_zero()) {
            ok = ok && (a * a.inverse()).is_one() && (b / a) * a == b;
        }
        field += ok ? 1 : 0;
    }

    int closure = 0;
    std::vector<MatrixGroup> groups{pauli().close(), gm(3).close(), find_entry("octahedral-48-29")->close(),
                                    dihedral_odd(7).close()};
    for (int k = 0; k < cases; k++) {
        const auto &g = groups[k % groups.size()];
        std::size_t a = rng() % g.order(), b = rng() % g.order();
        std::size_t ab = g.multiply(a, b);
        bool ok = g.element(ab) == g.element(a) * g.element(b) &&
                  (g.element(a) * g.element(g.inverse(a))).is_identity() &&
                  g.find(g.element(a) * g.element(b)) == ab && g.element(a).pow(g.element_order(a)).is_identity();
        closure += ok ? 1 : 0;
    }

    int tables = 0;
    std::vector<gen::GatePool> pools{gen::pauli_pool(), gen::gm2_pool()};
    std::vector<std::vector<std::pair<CMatrix, ConjugationTable>>> built(2);
    for (int p = 0; p < 2; p++) {
        for (const auto &n : pools[p].one) {
            built[p].emplace_back(gate(n.c_str()), conjugation_table(gate(n.c_str()), pools[p].group, 1));
        }
        for (const auto &n : pools[p].two) {
            built[p].emplace_back(gate(n.c_str()), conjugation_table(gate(n.c_str()), pools[p].group, 2));
        }
    }
    for (int k = 0; k < cases; k++) {
        int p = k % 2;
        const auto &g = pools[p].group;
        const auto &[u, t] = built[p][rng() % built[p].size()];
        std::size_t a = rng() % g.order(), b = rng() % g.order();
        bool ok;
        if (t.arity() == 1) {
            const auto &e = t.at(a);
            ok = u * g.element(a) * *u.inverse() == g.element(e.first).scaled(t.phase(e));
        } else {
            const auto &e = t.at(a, b);
            ok = u * kron(g.element(a), g.element(b)) * *u.inverse() ==
                 kron(g.element(e.first), g.element(e.second)).scaled(t.phase(e));
        }
        tables += ok ? 1 : 0;
    }

    int products = 0;
    std::vector<MatrixGroup> ent_groups{pauli().close(), gm(2).close(), find_entry("tetrahedral-M1")->close(),
                                        find_entry("dodecahedral-120-5-rep1")->close()};
    CMatrix sw = swap_gate(2);
    for (int k = 0; k < cases; k++) {
        const auto &g = ent_groups[k % ent_groups.size()];
        CMatrix v = kron(g.element(rng() % g.order()), g.element(rng() % g.order()));
        products += (!is_entangling(v) && !is_entangling(sw * v)) ? 1 : 0;
    }
    std::ostringstream d;
    d << "field axioms " << field << "/" << cases << ", closure " << closure << "/" << cases << ", tables " << tables
      << "/" << cases << ", product gates " << products << "/" << cases << " (seeded)";
    return {field == cases && closure == cases && tables == cases && products == cases, d.str()};
}

}  // namespace

int main() {
    std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
    };
    int failed = 0;
    for (const auto &[k, run] : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            o = run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += o.pass ? 0 : 1;
        std::printf("criterion %d: %s  %s [%.1fs]\n", k, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
