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

#include "gencliff/simulator.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <regex>
#include <unordered_map>

#include "gencliff/error.hpp"

namespace gencliff {

namespace {

using Vec = std::vector<Cyclo>;

Cyclo inner(const Vec &a, const Vec &b) {
    // <a|b>
    Vec ca;
    ca.reserve(a.size());
    for (const auto &x : a) {
        ca.push_back(x.conj());
    }
    std::vector<std::pair<const Cyclo *, const Cyclo *>> pairs;
    for (std::size_t i = 0; i < a.size(); i++) {
        pairs.emplace_back(&ca[i], &b[i]);
    }
    return sum_of_products(pairs);
}

void check_unit_norm(const Vec &v, int d, const std::string &what) {
    if (static_cast<int>(v.size()) != d) {
        fail(ErrorKind::DimensionMismatch,
             what + " has " + std::to_string(v.size()) + " amplitudes, expected " + std::to_string(d));
    }
    Cyclo n = inner(v, v);
    if (!n.is_one()) {
        fail(ErrorKind::NotUnitNorm, what + " has squared norm " + n.str());
    }
}

ConjugationTable::Entry make_entry(std::size_t first, std::size_t second, int k) {
    ConjugationTable::Entry e;
    e.first = static_cast<std::uint32_t>(first);
    e.second = static_cast<std::uint32_t>(second);
    e.phase = k;
    return e;
}

CMatrix sum_gate(int d) {
    CMatrix m(d * d);
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            m(a * d + (a + b) % d, a * d + b) = Cyclo(1);
        }
    }
    return m;
}

CMatrix cz_gate() {
    return CMatrix::diagonal({Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(-1)});
}

}  // namespace

Cyclo ConjugationTable::phase(const Entry &e) const {
    return Cyclo::root_of_unity(phase_order_, e.phase);
}

struct TableBuilder {
    // target is the group itself for arity 1 and its tensor square for arity 2.
    static ConjugationTable build(const CMatrix &gate, const MatrixGroup &group, const MatrixGroup &target, int arity,
                                  Mode mode) {
        int d = group.dim();
        int want = arity == 1 ? d : d * d;
        if (gate.dim() != want) {
            fail(ErrorKind::DimensionMismatch,
                 "gate is " + std::to_string(gate.dim()) + "x" + std::to_string(gate.dim()) + ", expected " +
                     std::to_string(want) + "x" + std::to_string(want));
        }
        auto inv = gate.inverse();
        if (!inv) {
            fail(ErrorKind::NotANormaliser, "gate is singular: " + gate.str());
        }
        ConjugationTable t;
        t.arity_ = arity;
        t.n_ = group.order();
        std::size_t cells = arity == 1 ? t.n_ : t.n_ * t.n_;
        std::vector<std::pair<int, int>> raw(cells);
        t.entries_.resize(cells);
        long long l = 1;
        for (std::size_t cell = 0; cell < cells; cell++) {
            CMatrix g =
                arity == 1 ? group.element(cell) : kron(group.element(cell / t.n_), group.element(cell % t.n_));
            CMatrix m = gate * g * *inv;
            std::size_t idx;
            Cyclo c(1);
            if (mode == Mode::Linear) {
                auto f = target.find(m);
                if (!f) {
                    fail(ErrorKind::NotANormaliser,
                         "gate " + gate.str() + " maps " + g.str() + " outside the group");
                }
                idx = *f;
            } else {
                auto f = target.find_projective(m);
                if (!f) {
                    fail(ErrorKind::NotANormaliser,
                         "gate " + gate.str() + " maps " + g.str() + " outside the group up to phase");
                }
                idx = f->index;
                c = f->scalar;
            }
            auto ex = c.root_of_unity_exponent();
            if (!ex) {
                fail(ErrorKind::NotANormaliser, "conjugation phase " + c.str() + " is not a root of unity");
            }
            raw[cell] = *ex;
            l = std::lcm(l, static_cast<long long>(ex->second));
            if (arity == 1) {
                t.entries_[cell] = make_entry(idx, 0, 0);
            } else {
                auto fac = target.tensor_factors(idx);
                t.entries_[cell] = make_entry(fac->first, fac->second, 0);
            }
        }
        if (l > max_conductor()) {
            fail(ErrorKind::ConductorLimitExceeded, "conjugation phases need w_" + std::to_string(l));
        }
        t.phase_order_ = static_cast<int>(l);
        for (std::size_t cell = 0; cell < cells; cell++) {
            t.entries_[cell].phase = static_cast<std::int32_t>(raw[cell].first * (l / raw[cell].second));
        }
        return t;
    }
};

ConjugationTable conjugation_table(const CMatrix &gate, const MatrixGroup &group, int arity, Mode mode) {
    if (arity == 1) {
        return TableBuilder::build(gate, group, group, 1, mode);
    }
    if (arity != 2) {
        fail(ErrorKind::InvalidInput, "arity must be 1 or 2");
    }
    int d = group.dim();
    if (gate.dim() != d * d) {
        fail(ErrorKind::DimensionMismatch, "two-wire gate must be " + std::to_string(d * d) + "x" +
                                               std::to_string(d * d));
    }
    return TableBuilder::build(gate, group, tensor_square(group), 2, mode);
}

struct Circuit::Impl {
    MatrixGroup group;
    std::optional<MatrixGroup> tensor;
    int n_wires = 0;
    std::vector<Gate> gates;
    std::vector<Vec> input;
    std::vector<Measurement> measurements;

    std::vector<ConjugationTable> tables;
    std::map<std::string, std::size_t> table_keys;
    struct Step {
        std::uint32_t table;
        std::int32_t w0;
        std::int32_t w1;
        std::int64_t scale;  // to units of w_{phase_order}
    };
    std::vector<std::size_t> gate_table;
    std::vector<Step> steps;
    long long phase_order = 1;
};

namespace {

std::shared_ptr<Circuit::Impl> build_impl(const MatrixGroup &group, int n_wires, std::vector<Vec> input,
                                          std::vector<Gate> gates, std::vector<Measurement> measurements,
                                          const Circuit::Impl *seed) {
    if (!group.valid()) {
        fail(ErrorKind::InvalidInput, "circuit has no group");
    }
    if (n_wires < 1) {
        fail(ErrorKind::InvalidInput, "circuit needs at least one wire");
    }
    int d = group.dim();
    if (static_cast<int>(input.size()) != n_wires) {
        fail(ErrorKind::DimensionMismatch, "input lists " + std::to_string(input.size()) + " wire states for " +
                                               std::to_string(n_wires) + " wires");
    }
    for (int w = 0; w < n_wires; w++) {
        check_unit_norm(input[w], d, "input state of wire " + std::to_string(w));
    }
    auto impl = std::make_shared<Circuit::Impl>();
    impl->group = group;
    impl->n_wires = n_wires;
    if (seed != nullptr) {
        impl->tensor = seed->tensor;
        impl->tables = seed->tables;
        impl->table_keys = seed->table_keys;
    }
    for (std::size_t k = 0; k < gates.size(); k++) {
        const Gate &g = gates[k];
        std::string where = "gate " + std::to_string(k) + (g.label.empty() ? "" : " (" + g.label + ")");
        if (g.condition) {
            fail(ErrorKind::AdaptiveGateRejected,
                 where + " is conditioned on measurement " + std::to_string(*g.condition) +
                     "; adaptive choices of gates are not simulable this way");
        }
        if (g.wires.empty() || g.wires.size() > 2) {
            fail(ErrorKind::InvalidInput, where + " must act on 1 or 2 wires");
        }
        for (int w : g.wires) {
            if (w < 0 || w >= n_wires) {
                fail(ErrorKind::InvalidInput, where + " uses wire " + std::to_string(w) + " out of range");
            }
        }
        if (g.wires.size() == 2 && g.wires[0] == g.wires[1]) {
            fail(ErrorKind::InvalidInput, where + " repeats a wire");
        }
        int arity = static_cast<int>(g.wires.size());
        std::string key = std::to_string(arity) + (g.mode == Mode::Linear ? "L" : "P") + g.matrix.canonical().str();
        auto it = impl->table_keys.find(key);
        std::size_t id;
        if (it != impl->table_keys.end()) {
            id = it->second;
        } else {
            auto inv = g.matrix.inverse();
            if (!inv) {
                fail(ErrorKind::NotANormaliser, where + " is singular");
            }
            try {
                if (arity == 1) {
                    impl->tables.push_back(TableBuilder::build(*inv, group, group, 1, g.mode));
                } else {
                    if (!impl->tensor) {
                        impl->tensor = tensor_square(group);
                    }
                    impl->tables.push_back(TableBuilder::build(*inv, group, *impl->tensor, 2, g.mode));
                }
            } catch (const Error &e) {
                fail(e.kind(), where + ": " + e.what());
            }
            id = impl->tables.size() - 1;
            impl->table_keys.emplace(key, id);
        }
        impl->gate_table.push_back(id);
    }
    for (const auto &m : measurements) {
        if (m.wire < 0 || m.wire >= n_wires) {
            fail(ErrorKind::InvalidInput, "measurement on wire " + std::to_string(m.wire) + " out of range");
        }
        if (m.after > gates.size()) {
            fail(ErrorKind::InvalidInput, "measurement after gate " + std::to_string(m.after) + " of " +
                                              std::to_string(gates.size()));
        }
    }
    for (std::size_t id : impl->gate_table) {
        impl->phase_order = std::lcm(impl->phase_order, static_cast<long long>(impl->tables[id].phase_order()));
    }
    if (impl->phase_order > max_conductor()) {
        fail(ErrorKind::ConductorLimitExceeded, "circuit phases need w_" + std::to_string(impl->phase_order));
    }
    impl->steps.reserve(gates.size());
    for (std::size_t k = 0; k < gates.size(); k++) {
        std::size_t id = impl->gate_table[k];
        Circuit::Impl::Step s;
        s.table = static_cast<std::uint32_t>(id);
        s.w0 = gates[k].wires[0];
        s.w1 = gates[k].wires.size() == 2 ? gates[k].wires[1] : -1;
        s.scale = impl->phase_order / impl->tables[id].phase_order();
        impl->steps.push_back(s);
    }
    impl->gates = std::move(gates);
    impl->input = std::move(input);
    impl->measurements = std::move(measurements);
    return impl;
}

}  // namespace

Circuit Circuit::build(const MatrixGroup &group, int n_wires, std::vector<std::vector<Cyclo>> input,
                       std::vector<Gate> gates, std::vector<Measurement> measurements) {
    Circuit c;
    c.impl_ = build_impl(group, n_wires, std::move(input), std::move(gates), std::move(measurements), nullptr);
    return c;
}

int Circuit::dim() const {
    return impl_->group.dim();
}
int Circuit::n_wires() const {
    return impl_->n_wires;
}
const MatrixGroup &Circuit::group() const {
    return impl_->group;
}
const std::vector<Gate> &Circuit::gates() const {
    return impl_->gates;
}
const std::vector<std::vector<Cyclo>> &Circuit::input() const {
    return impl_->input;
}
const std::vector<Measurement> &Circuit::measurements() const {
    return impl_->measurements;
}
std::size_t Circuit::distinct_gates() const {
    return impl_->tables.size();
}
const ConjugationTable &Circuit::backward_table(std::size_t k) const {
    return impl_->tables.at(impl_->gate_table.at(k));
}

Observable propagate(const Circuit &circuit, const Observable &observable, PropagationStats *stats) {
    const auto &impl = *circuit.impl_;
    if (static_cast<int>(observable.factors.size()) != impl.n_wires) {
        fail(ErrorKind::DimensionMismatch, "observable has " + std::to_string(observable.factors.size()) +
                                               " factors for " + std::to_string(impl.n_wires) + " wires");
    }
    std::size_t n = impl.group.order();
    for (std::size_t f : observable.factors) {
        if (f >= n) {
            fail(ErrorKind::NotAMember, "observable factor " + std::to_string(f) + " is not a group index");
        }
    }
    Observable out;
    out.factors = observable.factors;
    std::size_t *f = out.factors.data();
    const ConjugationTable *tables = impl.tables.data();
    long long acc = 0;
    const long long mod = impl.phase_order;
    for (auto it = impl.steps.rbegin(); it != impl.steps.rend(); ++it) {
        const ConjugationTable &t = tables[it->table];
        if (it->w1 < 0) {
            const auto &e = t.at(f[it->w0]);
            f[it->w0] = e.first;
            acc += e.phase * it->scale;
        } else {
            const auto &e = t.at(f[it->w0], f[it->w1]);
            f[it->w0] = e.first;
            f[it->w1] = e.second;
            acc += e.phase * it->scale;
        }
        if (acc >= mod) {
            acc %= mod;
        }
    }
    out.phase = observable.phase * Cyclo::root_of_unity(static_cast<int>(mod), acc);
    if (stats != nullptr) {
        stats->gates += impl.steps.size();
        stats->lookups += impl.steps.size();
        stats->tables = impl.tables.size();
    }
    return out;
}

namespace {

// lambda with g^dagger = lambda g, if there is one.
std::optional<Cyclo> adjoint_ratio(const CMatrix &g) {
    CMatrix a = g.adjoint();
    for (std::size_t e = 0; e < g.entries().size(); e++) {
        if (!g.entries()[e].is_zero()) {
            Cyclo lam = a.entries()[e] / g.entries()[e];
            if (a == g.scaled(lam)) {
                return lam;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

Observable single_wire_observable(const Circuit &circuit, int wire, const CMatrix &matrix) {
    if (wire < 0 || wire >= circuit.n_wires()) {
        fail(ErrorKind::InvalidInput, "target wire " + std::to_string(wire) + " out of range");
    }
    if (matrix.dim() != circuit.dim()) {
        fail(ErrorKind::DimensionMismatch, "observable must be " + std::to_string(circuit.dim()) + "x" +
                                               std::to_string(circuit.dim()));
    }
    auto m = circuit.group().find_projective(matrix);
    if (!m) {
        fail(ErrorKind::NotAMember, "observable " + matrix.str() + " is not in the group up to phase");
    }
    Observable o;
    o.phase = m->scalar;
    o.factors.assign(circuit.n_wires(), 0);
    o.factors[wire] = m->index;
    return o;
}

CMatrix observable_matrix(const Circuit &circuit, const Observable &observable) {
    double size = std::pow(circuit.dim(), observable.factors.size());
    if (size > 256) {
        fail(ErrorKind::InvalidInput, "dense observable too large");
    }
    CMatrix m = CMatrix::identity(1);
    for (std::size_t f : observable.factors) {
        m = kron(m, circuit.group().element(f));
    }
    return m.scaled(observable.phase);
}

ExpectationResult expectation(const Circuit &circuit, const Observable &observable,
                              const ExpectationOptions &options) {
    ExpectationResult res;
    Circuit c = circuit;
    Observable o = observable;
    if (!circuit.measurements().empty()) {
        if (static_cast<int>(o.factors.size()) != circuit.n_wires()) {
            fail(ErrorKind::DimensionMismatch, "observable does not match the circuit width");
        }
        c = dilate_measurements(circuit);
        res.ancillas = static_cast<std::size_t>(c.n_wires() - circuit.n_wires());
        o.factors.resize(c.n_wires(), 0);
    }
    Observable p = propagate(c, o, &res.stats);
    const MatrixGroup &g = c.group();
    Cyclo v = p.phase;
    for (int w = 0; w < c.n_wires() && !v.is_zero(); w++) {
        if (p.factors[w] != 0) {
            const Vec &a = c.input()[w];
            v *= inner(a, apply(g.element(p.factors[w]), a));
        }
    }

    // A^dagger = conj(phase) prod lambda_k g_k when every factor is self-adjoint up to phase.
    bool herm = true;
    Cyclo lam = observable.phase.conj();
    Cyclo sq = observable.phase * observable.phase;
    for (std::size_t f : observable.factors) {
        if (f == 0) {
            continue;
        }
        auto r = adjoint_ratio(g.element(f));
        if (!r) {
            herm = false;
            break;
        }
        lam *= *r;
        auto s = g.element(g.multiply(f, f)).scalar_value();
        sq = s ? sq * *s : Cyclo(0);
    }
    herm = herm && lam == observable.phase;

    res.wrapped = options.hermitian_wrapper;
    if (options.hermitian_wrapper) {
        res.value = v + v.conj();
        res.hermitian = true;
    } else {
        res.value = v;
        res.hermitian = herm;
        if (herm && sq.is_one()) {
            Rational half(1, 2);
            res.p0 = (Cyclo(1) + v).scaled(half);
            res.p1 = (Cyclo(1) - v).scaled(half);
        }
    }
    return res;
}

ExpectationResult expectation(const Circuit &circuit, int target_wire, const CMatrix &observable_matrix,
                              const ExpectationOptions &options) {
    return expectation(circuit, single_wire_observable(circuit, target_wire, observable_matrix), options);
}

Circuit dilate_measurements(const Circuit &circuit) {
    const auto &impl = *circuit.impl_;
    if (impl.measurements.empty()) {
        return circuit;
    }
    const MatrixGroup &group = impl.group;
    int d = group.dim();
    Circuit::Impl seed = impl;
    if (!seed.tensor) {
        seed.tensor = tensor_square(group);
    }
    auto usable = [&](const CMatrix &gate) {
        try {
            TableBuilder::build(gate, group, *seed.tensor, 2, Mode::Projective);
            return true;
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NotANormaliser) {
                throw;
            }
            return false;
        }
    };
    CMatrix copy;
    Vec ancilla(d, Cyclo(0));
    std::string label;
    if (usable(sum_gate(d))) {
        copy = sum_gate(d);
        ancilla[0] = Cyclo(1);
        label = d == 2 ? "CNOT" : "SUM";
    } else if (d == 2 && usable(cz_gate())) {
        copy = cz_gate();
        ancilla = {inv_sqrt_dim(2), inv_sqrt_dim(2)};
        label = "CZ";
    } else {
        fail(ErrorKind::NoDilationGate, "neither CNOT nor CZ normalises " +
                                            (group.name().empty() ? std::string("the group") : group.name()) +
                                            " (x) itself");
    }

    int n = impl.n_wires;
    std::vector<Gate> gates;
    for (std::size_t i = 0; i <= impl.gates.size(); i++) {
        for (std::size_t j = 0; j < impl.measurements.size(); j++) {
            if (impl.measurements[j].after == i) {
                Gate g;
                g.matrix = copy;
                g.wires = {impl.measurements[j].wire, n + static_cast<int>(j)};
                g.label = label;
                gates.push_back(std::move(g));
            }
        }
        if (i < impl.gates.size()) {
            gates.push_back(impl.gates[i]);
        }
    }
    std::vector<Vec> input = impl.input;
    input.insert(input.end(), impl.measurements.size(), ancilla);
    Circuit out;
    out.impl_ = build_impl(group, n + static_cast<int>(impl.measurements.size()), std::move(input), std::move(gates),
                           {}, &seed);
    return out;
}

Cyclo inv_sqrt_dim(int d) {
    switch (d) {
        case 1:
            return Cyclo(1);
        case 2:
            return Cyclo::parse("1/2*w8 + 1/2*w8^7");
        case 3:
            return Cyclo::parse("1/3*w12 + 1/3*w12^11");
        case 4:
            return Cyclo(Rational(1, 2));
        default:
            fail(ErrorKind::InvalidInput, "1/sqrt(d) is only tabulated for d <= 4");
    }
}

std::optional<CMatrix> named_gate(const std::string &name) {
    Cyclo i = Cyclo::root_of_unity(4, 1);
    if (name == "I") {
        return CMatrix::identity(2);
    }
    if (name == "X") {
        return CMatrix::from_rows({{0, 1}, {1, 0}});
    }
    if (name == "Y") {
        return CMatrix::from_rows({{0, -i}, {i, 0}});
    }
    if (name == "Z") {
        return CMatrix::diagonal({1, -1});
    }
    if (name == "H") {
        Cyclo s = inv_sqrt_dim(2);
        return CMatrix::from_rows({{s, s}, {s, -s}});
    }
    if (name == "P" || name == "S") {
        return CMatrix::diagonal({1, i});
    }
    if (name == "CZ") {
        return cz_gate();
    }
    if (name == "CNOT" || name == "CX") {
        return sum_gate(2);
    }
    if (name == "SWAP") {
        return swap_gate(2);
    }
    static const std::regex root(R"(^Zroot(\d{1,4})$)");
    std::smatch m;
    if (std::regex_match(name, m, root)) {
        int k = std::stoi(m[1]);
        if (k >= 1) {
            return CMatrix::diagonal({1, Cyclo::root_of_unity(k, 1)});
        }
    }
    return std::nullopt;
}

TeleportationPovm build_teleportation_povm(const MatrixGroup &group) {
    if (!group.is_irreducible()) {
        fail(ErrorKind::NotIrreducible, "teleportation needs an irreducible group");
    }
    for (const auto &g : group.generators()) {
        if (!g.is_unitary()) {
            fail(ErrorKind::InvalidInput, "teleportation needs a unitary group; generator " + g.str() + " is not");
        }
    }
    TeleportationPovm p;
    int d = group.dim();
    p.dim = d;
    p.group_order = group.order();
    p.weight = Rational(d, static_cast<long long>(p.group_order));
    CMatrix sum(d * d);
    p.rank_one = true;
    for (const auto &u : group.elements()) {
        // (U^dagger (x) I) sum_j |jj> has amplitude (U^dagger)_{rc} at |r c>.
        Vec b = u.adjoint().entries();
        CMatrix a(d * d);
        for (int r = 0; r < d * d; r++) {
            for (int c = 0; c < d * d; c++) {
                a(r, c) = (b[r] * b[c].conj()).scaled(p.weight);
            }
        }
        p.rank_one = p.rank_one && a * a == a.scaled(a.trace());
        sum = sum + a;
        p.vectors.push_back(std::move(b));
        p.elements.push_back(std::move(a));
    }
    p.complete = sum.is_identity();
    return p;
}

bool TeleportationReport::all_ok() const {
    if (!complete || !rank_one || outcomes.size() != group_order) {
        return false;
    }
    Cyclo want(Rational(1, static_cast<long long>(group_order)));
    for (const auto &o : outcomes) {
        if (!o.state_matches || !(o.probability == want)) {
            return false;
        }
    }
    return true;
}

TeleportationReport verify_teleportation(const TeleportationPovm &povm, const MatrixGroup &group, const Vec &alpha) {
    int d = povm.dim;
    check_unit_norm(alpha, d, "test state");
    int d2 = d * d;
    // |alpha> (x) sum_j |jj>, the 1/sqrt(d) of |phi> folded into the probabilities.
    Vec psi(static_cast<std::size_t>(d2) * d, Cyclo(0));
    for (int x = 0; x < d; x++) {
        for (int j = 0; j < d; j++) {
            psi[(x * d + j) * d + j] = alpha[x];
        }
    }
    TeleportationReport rep;
    rep.group_order = povm.group_order;
    rep.complete = povm.complete;
    rep.rank_one = povm.rank_one;
    Rational inv_d(1, d);
    for (std::size_t i = 0; i < povm.elements.size(); i++) {
        const CMatrix &a = povm.elements[i];
        Vec w(psi.size(), Cyclo(0));
        for (int xy = 0; xy < d2; xy++) {
            for (int z = 0; z < d; z++) {
                Cyclo acc(0);
                for (int k = 0; k < d2; k++) {
                    const Cyclo &s = psi[k * d + z];
                    if (!s.is_zero() && !a(xy, k).is_zero()) {
                        acc += a(xy, k) * s;
                    }
                }
                w[xy * d + z] = acc;
            }
        }
        Vec bob = apply(group.element(i), alpha);
        Vec rhs(psi.size());
        for (int xy = 0; xy < d2; xy++) {
            for (int z = 0; z < d; z++) {
                rhs[xy * d + z] = povm.vectors[i][xy] * bob[z];
            }
        }
        TeleportationOutcome o;
        o.index = i;
        o.probability = inner(psi, w).scaled(inv_d);
        std::size_t k = 0;
        while (k < rhs.size() && rhs[k].is_zero()) {
            k++;
        }
        if (k < rhs.size()) {
            Cyclo lam = w[k] / rhs[k];
            bool same = !lam.is_zero();
            for (std::size_t e = 0; same && e < rhs.size(); e++) {
                same = w[e] == lam * rhs[e];
            }
            o.state_matches = same;
        }
        std::complex<double> ov = 0;
        double nw = 0;
        double nr = 0;
        for (std::size_t e = 0; e < rhs.size(); e++) {
            auto x = w[e].to_complex();
            auto y = rhs[e].to_complex();
            ov += std::conj(x) * y;
            nw += std::norm(x);
            nr += std::norm(y);
        }
        o.fidelity = nw > 0 && nr > 0 ? std::norm(ov) / (nw * nr) : 0;
        rep.outcomes.push_back(std::move(o));
    }
    return rep;
}

TeleportationReport verify_teleportation(const MatrixGroup &group, const Vec &alpha) {
    return verify_teleportation(build_teleportation_povm(group), group, alpha);
}

}  // namespace gencliff
