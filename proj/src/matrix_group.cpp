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

#include "gencliff/matrix_group.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "gencliff/error.hpp"

namespace gencliff {

namespace {

using Index32 = std::uint32_t;
constexpr Index32 kNone = 0xFFFFFFFFu;

struct LookupTable {
    std::unordered_multimap<std::size_t, Index32> by_hash;
    std::vector<CMatrix> keys;  // empty when keys are the elements themselves
};

}  // namespace

struct MatrixGroup::Impl {
    int dim = 0;
    int conductor = 1;
    std::vector<CMatrix> generators;
    std::vector<std::size_t> gen_index;
    std::vector<CMatrix> elements;
    std::vector<ComplexMatrix> approx;
    std::vector<Index32> rmul;  // elements.size() * generators.size()
    std::vector<Index32> parent;
    std::vector<std::uint16_t> parent_gen;

    // Tensor-square bookkeeping.
    std::unique_ptr<MatrixGroup> base;
    std::vector<std::pair<Index32, Index32>> factors;
    std::vector<Index32> pair_to_index;

    mutable std::recursive_mutex mu;
    mutable std::map<int, std::unique_ptr<LookupTable>> exact_tables;
    mutable std::map<int, std::unique_ptr<LookupTable>> proj_tables;
    mutable std::vector<int> orders;
    mutable std::vector<Index32> inverses;
    mutable std::vector<int> proj_orders;
    mutable std::map<int, std::vector<std::size_t>> by_order;
    mutable std::vector<std::unique_ptr<std::vector<char>>> comm_rows;
    mutable std::optional<std::vector<std::size_t>> centre;
    mutable std::optional<std::vector<std::size_t>> scalars;
    mutable std::optional<bool> irreducible;

    std::size_t r() const {
        return generators.size();
    }

    std::size_t mul(std::size_t a, std::size_t b) const {
        std::vector<std::uint16_t> w;
        for (std::size_t x = b; x != 0; x = parent[x]) {
            w.push_back(parent_gen[x]);
        }
        std::size_t cur = a;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            cur = rmul[cur * r() + *it];
        }
        return cur;
    }

    void compute_bfs_tree() {
        std::size_t n = elements.size();
        parent.assign(n, kNone);
        parent_gen.assign(n, 0);
        std::vector<char> seen(n, 0);
        std::deque<std::size_t> q{0};
        seen[0] = 1;
        parent[0] = 0;
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            for (std::size_t t = 0; t < r(); t++) {
                std::size_t y = rmul[x * r() + t];
                if (!seen[y]) {
                    seen[y] = 1;
                    parent[y] = static_cast<Index32>(x);
                    parent_gen[y] = static_cast<std::uint16_t>(t);
                    q.push_back(y);
                }
            }
        }
    }

    void compute_approx() {
        approx.clear();
        approx.reserve(elements.size());
        for (const auto &e : elements) {
            approx.push_back(e.approx());
        }
    }

    const LookupTable &exact_table(int l) const {
        std::lock_guard<std::recursive_mutex> lock(mu);
        auto it = exact_tables.find(l);
        if (it != exact_tables.end()) {
            return *it->second;
        }
        auto t = std::make_unique<LookupTable>();
        if (l != conductor) {
            t->keys.reserve(elements.size());
            for (const auto &e : elements) {
                t->keys.push_back(e.lifted(l));
            }
        }
        const auto &keys = t->keys.empty() ? elements : t->keys;
        for (std::size_t i = 0; i < keys.size(); i++) {
            t->by_hash.emplace(keys[i].raw_hash(), static_cast<Index32>(i));
        }
        return *exact_tables.emplace(l, std::move(t)).first->second;
    }

    const LookupTable &proj_table(int l) const {
        std::lock_guard<std::recursive_mutex> lock(mu);
        auto it = proj_tables.find(l);
        if (it != proj_tables.end()) {
            return *it->second;
        }
        auto t = std::make_unique<LookupTable>();
        t->keys.reserve(elements.size());
        for (std::size_t i = 0; i < elements.size(); i++) {
            CMatrix key = elements[i].projective_normal_form().first.lifted(l);
            t->by_hash.emplace(key.raw_hash(), static_cast<Index32>(i));
            t->keys.push_back(std::move(key));
        }
        return *proj_tables.emplace(l, std::move(t)).first->second;
    }

    void compute_orders() const {
        std::lock_guard<std::recursive_mutex> lock(mu);
        if (!orders.empty()) {
            return;
        }
        std::size_t n = elements.size();
        std::vector<int> ord(n, 0);
        std::vector<Index32> inv(n, kNone);
        for (std::size_t a = 0; a < n; a++) {
            // Invariant: cur = a^k. The last non-identity power is a^-1.
            std::size_t last = 0;
            std::size_t cur = a;
            int k = 1;
            while (cur != 0) {
                last = cur;
                cur = mul(cur, a);
                k++;
                if (k > static_cast<int>(n) + 1) {
                    fail(ErrorKind::InvalidInput, "element order exceeds group order");
                }
            }
            ord[a] = k;
            inv[a] = static_cast<Index32>(last);
        }
        inverses = std::move(inv);
        for (std::size_t a = 0; a < n; a++) {
            by_order[ord[a]].push_back(a);
        }
        orders = std::move(ord);
    }

    const std::vector<std::size_t> &scalar_list() const {
        std::lock_guard<std::recursive_mutex> lock(mu);
        if (!scalars) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < elements.size(); i++) {
                const ComplexMatrix &m = approx[i];
                bool maybe = true;
                for (int a = 0; a < dim && maybe; a++) {
                    for (int b = 0; b < dim && maybe; b++) {
                        std::complex<double> want = a == b ? m(0, 0) : 0.0;
                        if (std::abs(m(a, b) - want) > 1e-6) {
                            maybe = false;
                        }
                    }
                }
                if (maybe && elements[i].scalar_value()) {
                    s.push_back(i);
                }
            }
            scalars = std::move(s);
        }
        return *scalars;
    }
};

namespace {

void validate_generators(const std::vector<CMatrix> &gens) {
    if (gens.empty()) {
        fail(ErrorKind::InvalidInput, "a group needs at least one generator");
    }
    int d = gens[0].dim();
    if (d < 1 || d > 4) {
        fail(ErrorKind::DimensionMismatch, "group dimension must be between 1 and 4, got " + std::to_string(d));
    }
    for (std::size_t t = 0; t < gens.size(); t++) {
        if (gens[t].dim() != d) {
            fail(ErrorKind::DimensionMismatch, "generator " + std::to_string(t) + " has dimension " +
                                                   std::to_string(gens[t].dim()) + ", expected " + std::to_string(d));
        }
        if (gens[t].determinant().is_zero()) {
            fail(ErrorKind::SingularGenerator, "generator " + std::to_string(t) + " " + gens[t].str() + " is singular");
        }
    }
}

std::optional<std::size_t> lookup(const LookupTable &t, const std::vector<CMatrix> &elements, const CMatrix &key) {
    const auto &keys = t.keys.empty() ? elements : t.keys;
    auto range = t.by_hash.equal_range(key.raw_hash());
    for (auto it = range.first; it != range.second; ++it) {
        if (keys[it->second].raw_equal(key)) {
            return it->second;
        }
    }
    return std::nullopt;
}

}  // namespace

MatrixGroup MatrixGroup::close(const std::vector<CMatrix> &generators, const ClosureOptions &options,
                               std::string name) {
    validate_generators(generators);
    auto impl = std::make_shared<MatrixGroup::Impl>();
    impl->dim = generators[0].dim();
    int l = 1;
    for (const auto &g : generators) {
        l = std::lcm(l, g.conductor());
    }
    impl->conductor = l;
    for (const auto &g : generators) {
        impl->generators.push_back(g.lifted(l));
    }
    std::size_t r = impl->r();
    if (r > 65535) {
        fail(ErrorKind::InvalidInput, "too many generators");
    }
    std::unordered_multimap<std::size_t, Index32> table;
    auto &elements = impl->elements;
    elements.push_back(CMatrix::identity(impl->dim).lifted(l));
    table.emplace(elements[0].raw_hash(), 0);
    impl->parent.push_back(0);
    impl->parent_gen.push_back(0);
    for (std::size_t i = 0; i < elements.size(); i++) {
        for (std::size_t t = 0; t < r; t++) {
            CMatrix p = elements[i] * impl->generators[t];
            std::size_t h = p.raw_hash();
            Index32 found = kNone;
            auto range = table.equal_range(h);
            for (auto it = range.first; it != range.second; ++it) {
                if (elements[it->second].raw_equal(p)) {
                    found = it->second;
                    break;
                }
            }
            if (found == kNone) {
                if (elements.size() >= options.max_order) {
                    fail(ErrorKind::ClosureBudgetExceeded,
                         "closure exceeded " + std::to_string(options.max_order) + " elements" +
                             (name.empty() ? "" : " for '" + name + "'"));
                }
                found = static_cast<Index32>(elements.size());
                table.emplace(h, found);
                elements.push_back(std::move(p));
                impl->parent.push_back(static_cast<Index32>(i));
                impl->parent_gen.push_back(static_cast<std::uint16_t>(t));
            }
            impl->rmul.push_back(found);
        }
    }
    for (std::size_t t = 0; t < r; t++) {
        impl->gen_index.push_back(impl->rmul[t]);
    }
    impl->compute_approx();
    MatrixGroup g;
    g.impl_ = std::move(impl);
    g.name_ = std::move(name);
    return g;
}

const std::string &MatrixGroup::name() const {
    return name_;
}

MatrixGroup MatrixGroup::with_name(std::string name) const {
    MatrixGroup g = *this;
    g.name_ = std::move(name);
    return g;
}

int MatrixGroup::dim() const {
    return impl_->dim;
}

std::size_t MatrixGroup::order() const {
    return impl_->elements.size();
}

int MatrixGroup::conductor() const {
    return impl_->conductor;
}

const std::vector<CMatrix> &MatrixGroup::generators() const {
    return impl_->generators;
}

std::size_t MatrixGroup::num_generators() const {
    return impl_->generators.size();
}

std::size_t MatrixGroup::generator_index(std::size_t t) const {
    return impl_->gen_index.at(t);
}

const CMatrix &MatrixGroup::element(std::size_t i) const {
    return impl_->elements.at(i);
}

const std::vector<CMatrix> &MatrixGroup::elements() const {
    return impl_->elements;
}

const ComplexMatrix &MatrixGroup::approx(std::size_t i) const {
    return impl_->approx.at(i);
}

std::complex<double> MatrixGroup::approx_trace(std::size_t i) const {
    return impl_->approx.at(i).trace();
}

std::size_t MatrixGroup::right_multiply(std::size_t i, std::size_t t) const {
    return impl_->rmul[i * impl_->r() + t];
}

std::size_t MatrixGroup::multiply(std::size_t a, std::size_t b) const {
    return impl_->mul(a, b);
}

std::size_t MatrixGroup::inverse(std::size_t a) const {
    impl_->compute_orders();
    return impl_->inverses.at(a);
}

std::vector<std::size_t> MatrixGroup::word(std::size_t i) const {
    std::vector<std::size_t> w;
    for (std::size_t x = i; x != 0; x = impl_->parent[x]) {
        w.push_back(impl_->parent_gen[x]);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::optional<std::size_t> MatrixGroup::find(const CMatrix &m) const {
    if (m.dim() != impl_->dim) {
        return std::nullopt;
    }
    int l = std::lcm(impl_->conductor, m.conductor());
    const LookupTable &t = impl_->exact_table(l);
    return lookup(t, impl_->elements, m.lifted(l));
}

std::size_t MatrixGroup::index_of(const CMatrix &m) const {
    auto i = find(m);
    if (!i) {
        fail(ErrorKind::NotAMember, m.str() + " is not an element of " + (name_.empty() ? "the group" : name_));
    }
    return *i;
}

std::vector<MatrixGroup::ProjectiveMatch> MatrixGroup::find_projective_all(const CMatrix &m) const {
    std::vector<ProjectiveMatch> out;
    if (m.dim() != impl_->dim || m.is_zero()) {
        return out;
    }
    auto [normal, c] = m.projective_normal_form();
    int l = std::lcm(impl_->conductor, normal.conductor());
    const LookupTable &t = impl_->proj_table(l);
    CMatrix key = normal.lifted(l);
    auto range = t.by_hash.equal_range(key.raw_hash());
    std::size_t first = 0;
    while (m.entries()[first].is_zero()) {
        first++;
    }
    for (auto it = range.first; it != range.second; ++it) {
        if (t.keys[it->second].raw_equal(key)) {
            const Cyclo &gf = impl_->elements[it->second].entries()[first];
            out.push_back({it->second, c / gf});
        }
    }
    auto angle = [](const Cyclo &z) {
        double a = std::arg(z.to_complex());
        if (a < -1e-9) {
            a += 2 * std::numbers::pi;
        }
        return std::max(a, 0.0);
    };
    std::sort(out.begin(), out.end(),
              [&](const ProjectiveMatch &x, const ProjectiveMatch &y) { return angle(x.scalar) < angle(y.scalar); });
    return out;
}

std::optional<MatrixGroup::ProjectiveMatch> MatrixGroup::find_projective(const CMatrix &m) const {
    auto all = find_projective_all(m);
    if (all.empty()) {
        return std::nullopt;
    }
    return all.front();
}

int MatrixGroup::element_order(std::size_t i) const {
    impl_->compute_orders();
    return impl_->orders.at(i);
}

int MatrixGroup::projective_order(std::size_t i) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    if (impl_->proj_orders.empty()) {
        const auto &sc = impl_->scalar_list();
        std::vector<char> is_scalar(order(), 0);
        for (auto s : sc) {
            is_scalar[s] = 1;
        }
        std::vector<int> po(order());
        for (std::size_t a = 0; a < order(); a++) {
            std::size_t cur = a;
            int k = 1;
            while (!is_scalar[cur]) {
                cur = impl_->mul(cur, a);
                k++;
            }
            po[a] = k;
        }
        impl_->proj_orders = std::move(po);
    }
    return impl_->proj_orders.at(i);
}

const std::vector<std::size_t> &MatrixGroup::elements_of_order(int k) const {
    static const std::vector<std::size_t> empty;
    impl_->compute_orders();
    auto it = impl_->by_order.find(k);
    return it == impl_->by_order.end() ? empty : it->second;
}

bool MatrixGroup::commute(std::size_t a, std::size_t b) const {
    return impl_->mul(a, b) == impl_->mul(b, a);
}

const std::vector<char> &MatrixGroup::commutant(std::size_t a) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    auto &rows = impl_->comm_rows;
    if (rows.empty()) {
        rows.resize(order());
    }
    if (!rows[a]) {
        auto row = std::make_unique<std::vector<char>>(order());
        for (std::size_t c = 0; c < order(); c++) {
            (*row)[c] = commute(a, c) ? 1 : 0;
        }
        rows[a] = std::move(row);
    }
    return *rows[a];
}

const std::vector<std::size_t> &MatrixGroup::centre() const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    if (!impl_->centre) {
        std::vector<std::size_t> z;
        for (std::size_t i = 0; i < order(); i++) {
            bool central = true;
            for (std::size_t t = 0; t < num_generators() && central; t++) {
                central = right_multiply(i, t) == impl_->mul(impl_->gen_index[t], i);
            }
            if (central) {
                z.push_back(i);
            }
        }
        impl_->centre = std::move(z);
    }
    return *impl_->centre;
}

const std::vector<std::size_t> &MatrixGroup::scalars() const {
    return impl_->scalar_list();
}

bool MatrixGroup::is_scalar_group() const {
    return scalars().size() == order();
}

bool MatrixGroup::is_irreducible() const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    if (!impl_->irreducible) {
        // Character norm: sum |tr g|^2 = |G| exactly iff irreducible.
        Cyclo total;
        for (const auto &e : impl_->elements) {
            Cyclo t = e.trace();
            if (!t.is_zero()) {
                total += t * t.conj();
            }
        }
        impl_->irreducible = total == Cyclo(static_cast<long long>(order()));
    }
    return *impl_->irreducible;
}

std::vector<std::size_t> MatrixGroup::class_representatives(const std::vector<std::size_t> &subset) const {
    std::vector<Index32> label(order(), kNone);
    std::vector<std::size_t> gen_inv;
    for (std::size_t t = 0; t < num_generators(); t++) {
        gen_inv.push_back(inverse(impl_->gen_index[t]));
    }
    std::vector<std::size_t> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> reps;
    for (std::size_t x : sorted) {
        if (label[x] != kNone) {
            continue;
        }
        label[x] = static_cast<Index32>(x);
        reps.push_back(x);
        std::deque<std::size_t> q{x};
        while (!q.empty()) {
            std::size_t y = q.front();
            q.pop_front();
            for (std::size_t t = 0; t < num_generators(); t++) {
                std::size_t z = right_multiply(impl_->mul(gen_inv[t], y), t);
                if (label[z] == kNone) {
                    label[z] = static_cast<Index32>(x);
                    q.push_back(z);
                }
            }
        }
    }
    return reps;
}

std::size_t MatrixGroup::subgroup_order(const std::vector<std::size_t> &generator_subset) const {
    std::vector<char> seen(order(), 0);
    std::deque<std::size_t> q{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (std::size_t t : generator_subset) {
            std::size_t y = right_multiply(x, t);
            if (!seen[y]) {
                seen[y] = 1;
                count++;
                q.push_back(y);
            }
        }
    }
    return count;
}

std::optional<std::pair<std::size_t, std::size_t>> MatrixGroup::tensor_factors(std::size_t i) const {
    if (!impl_->base) {
        return std::nullopt;
    }
    return std::make_pair(static_cast<std::size_t>(impl_->factors[i].first),
                          static_cast<std::size_t>(impl_->factors[i].second));
}

std::optional<std::size_t> MatrixGroup::tensor_index(std::size_t a, std::size_t b) const {
    if (!impl_->base) {
        return std::nullopt;
    }
    return impl_->pair_to_index[a * impl_->base->order() + b];
}

const MatrixGroup *MatrixGroup::tensor_base() const {
    return impl_->base.get();
}

MatrixGroup close_group(const std::vector<CMatrix> &generators, std::size_t max_order) {
    ClosureOptions o;
    o.max_order = max_order;
    return MatrixGroup::close(generators, o);
}

int element_order(const CMatrix &g, const MatrixGroup &group) {
    return group.element_order(group.index_of(g));
}

CentreInfo compute_centre(const MatrixGroup &group) {
    CentreInfo info;
    const auto &z = group.centre();
    for (std::size_t i : z) {
        if (!group.element(i).scalar_value()) {
            fail(ErrorKind::NonScalarCentre, "central element " + group.element(i).str() + " is not scalar");
        }
        info.elements.push_back(group.element(i));
    }
    // Z(G) consists of scalars forming a cyclic group of order s; its generator with
    // the smallest positive argument is omega_s.
    info.s = static_cast<int>(z.size());
    info.min_phase = Cyclo::root_of_unity(info.s, 1);
    return info;
}

bool is_irreducible(const MatrixGroup &group) {
    return group.is_irreducible();
}

MatrixGroup tensor_square(const MatrixGroup &group, const ClosureOptions &options) {
    const auto &g = *group.impl_;
    std::size_t n = g.elements.size();
    int d = g.dim;
    auto impl = std::make_shared<MatrixGroup::Impl>();
    impl->dim = d * d;
    impl->conductor = g.conductor;
    CMatrix id = CMatrix::identity(d);
    for (const auto &gen : g.generators) {
        impl->generators.push_back(kron(gen, id).lifted(g.conductor));
    }
    for (const auto &gen : g.generators) {
        impl->generators.push_back(kron(id, gen).lifted(g.conductor));
    }
    std::unordered_multimap<std::size_t, Index32> table;
    impl->pair_to_index.assign(n * n, kNone);
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            CMatrix m = kron(g.elements[a], g.elements[b]);
            std::size_t h = m.raw_hash();
            Index32 found = kNone;
            auto range = table.equal_range(h);
            for (auto it = range.first; it != range.second; ++it) {
                if (impl->elements[it->second].raw_equal(m)) {
                    found = it->second;
                    break;
                }
            }
            if (found == kNone) {
                if (impl->elements.size() >= options.max_order) {
                    fail(ErrorKind::ClosureBudgetExceeded,
                         "tensor square exceeded " + std::to_string(options.max_order) + " elements");
                }
                found = static_cast<Index32>(impl->elements.size());
                table.emplace(h, found);
                impl->elements.push_back(std::move(m));
                impl->factors.emplace_back(static_cast<Index32>(a), static_cast<Index32>(b));
            }
            impl->pair_to_index[a * n + b] = found;
        }
    }
    std::size_t r0 = g.generators.size();
    std::size_t r = 2 * r0;
    impl->rmul.resize(impl->elements.size() * r);
    for (std::size_t i = 0; i < impl->elements.size(); i++) {
        auto [a, b] = impl->factors[i];
        for (std::size_t t = 0; t < r0; t++) {
            impl->rmul[i * r + t] = impl->pair_to_index[g.rmul[a * r0 + t] * n + b];
            impl->rmul[i * r + r0 + t] = impl->pair_to_index[a * n + g.rmul[b * r0 + t]];
        }
    }
    for (std::size_t t = 0; t < r0; t++) {
        impl->gen_index.push_back(impl->pair_to_index[g.gen_index[t] * n]);
    }
    for (std::size_t t = 0; t < r0; t++) {
        impl->gen_index.push_back(impl->pair_to_index[g.gen_index[t]]);
    }
    impl->compute_bfs_tree();
    impl->compute_approx();
    impl->base = std::make_unique<MatrixGroup>(group);
    MatrixGroup out;
    out.impl_ = std::move(impl);
    out.name_ = group.name().empty() ? "" : group.name() + "^(x)2";
    return out;
}

MatrixGroup central_extension(const MatrixGroup &group, int k, const ClosureOptions &options) {
    if (k < 1) {
        fail(ErrorKind::InvalidInput, "extension phase order must be positive");
    }
    const auto &g = *group.impl_;
    std::size_t n = g.elements.size();
    int l = std::lcm(g.conductor, k % 4 == 2 ? k / 2 : k);
    auto impl = std::make_shared<MatrixGroup::Impl>();
    impl->dim = g.dim;
    impl->conductor = l;
    for (const auto &gen : g.generators) {
        impl->generators.push_back(gen.lifted(l));
    }
    Cyclo zeta = Cyclo::root_of_unity(k, 1);
    impl->generators.push_back(CMatrix::identity(g.dim).scaled(zeta).lifted(l));
    std::unordered_multimap<std::size_t, Index32> table;
    std::vector<Index32> index_of_pair(static_cast<std::size_t>(k) * n, kNone);
    std::vector<std::pair<int, Index32>> pair_of;
    Cyclo phase(1);
    for (int a = 0; a < k; a++) {
        for (std::size_t i = 0; i < n; i++) {
            CMatrix m = (a == 0 ? g.elements[i] : g.elements[i].scaled(phase)).lifted(l);
            std::size_t h = m.raw_hash();
            Index32 found = kNone;
            auto range = table.equal_range(h);
            for (auto it = range.first; it != range.second; ++it) {
                if (impl->elements[it->second].raw_equal(m)) {
                    found = it->second;
                    break;
                }
            }
            if (found == kNone) {
                if (impl->elements.size() >= options.max_order) {
                    fail(ErrorKind::ClosureBudgetExceeded,
                         "central extension exceeded " + std::to_string(options.max_order) + " elements");
                }
                found = static_cast<Index32>(impl->elements.size());
                table.emplace(h, found);
                impl->elements.push_back(std::move(m));
                pair_of.emplace_back(a, static_cast<Index32>(i));
            }
            index_of_pair[static_cast<std::size_t>(a) * n + i] = found;
        }
        phase = phase * zeta;
    }
    std::size_t r0 = g.generators.size();
    std::size_t r = r0 + 1;
    impl->rmul.resize(impl->elements.size() * r);
    for (std::size_t e = 0; e < impl->elements.size(); e++) {
        auto [a, i] = pair_of[e];
        for (std::size_t t = 0; t < r0; t++) {
            impl->rmul[e * r + t] = index_of_pair[static_cast<std::size_t>(a) * n + g.rmul[i * r0 + t]];
        }
        impl->rmul[e * r + r0] = index_of_pair[static_cast<std::size_t>((a + 1) % k) * n + i];
    }
    for (std::size_t t = 0; t < r0; t++) {
        impl->gen_index.push_back(index_of_pair[g.gen_index[t]]);
    }
    impl->gen_index.push_back(index_of_pair[n]);
    impl->compute_bfs_tree();
    impl->compute_approx();
    MatrixGroup out;
    out.impl_ = std::move(impl);
    out.name_ = group.name().empty() ? "" : group.name() + "+w" + std::to_string(k);
    return out;
}

std::vector<std::size_t> reduced_generator_set(const MatrixGroup &group) {
    std::vector<std::size_t> kept(group.num_generators());
    std::iota(kept.begin(), kept.end(), 0);
    for (std::size_t t = group.num_generators(); t-- > 0;) {
        std::vector<std::size_t> without;
        for (std::size_t u : kept) {
            if (u != t) {
                without.push_back(u);
            }
        }
        if (!without.empty() && group.subgroup_order(without) == group.order()) {
            kept = std::move(without);
        }
    }
    return kept;
}

UnitarizeResult unitarize(const MatrixGroup &group, double tol) {
    int d = group.dim();
    using Mat = Eigen::MatrixXcd;
    auto to_eigen = [d](const ComplexMatrix &m) {
        Mat e(d, d);
        for (int r = 0; r < d; r++) {
            for (int c = 0; c < d; c++) {
                e(r, c) = m(r, c);
            }
        }
        return e;
    };
    Mat s = Mat::Zero(d, d);
    for (std::size_t i = 0; i < group.order(); i++) {
        Mat g = to_eigen(group.approx(i));
        s += g.adjoint() * g;
    }
    s /= static_cast<double>(group.order());
    Eigen::SelfAdjointEigenSolver<Mat> eig(s);
    Mat e = eig.operatorSqrt();
    Mat e_inv = eig.operatorInverseSqrt();
    UnitarizeResult out;
    out.e = ComplexMatrix(d);
    for (int r = 0; r < d; r++) {
        for (int c = 0; c < d; c++) {
            out.e(r, c) = e(r, c);
        }
    }
    for (std::size_t i = 0; i < group.order(); i++) {
        Mat u = e * to_eigen(group.approx(i)) * e_inv;
        double res = (u * u.adjoint() - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
        out.residual = std::max(out.residual, res);
        ComplexMatrix img(d);
        for (int r = 0; r < d; r++) {
            for (int c = 0; c < d; c++) {
                img(r, c) = u(r, c);
            }
        }
        out.images.push_back(std::move(img));
    }
    if (out.residual > tol) {
        fail(ErrorKind::ToleranceNotMet,
             "unitarized residual " + std::to_string(out.residual) + " exceeds tolerance " + std::to_string(tol));
    }
    return out;
}

}  // namespace gencliff
