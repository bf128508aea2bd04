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

#include "gencliff/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <regex>
#include <set>

#include "gencliff/error.hpp"

namespace gencliff {

namespace {

const Cyclo &inv_sqrt2() {
    static const Cyclo v = Cyclo::parse("1/2*w8+1/2*w8^7");
    return v;
}

CMatrix mat(const std::vector<std::vector<std::string>> &rows, const Cyclo &scale = Cyclo(1)) {
    CMatrix m = CMatrix::parse(rows);
    return scale.is_one() ? m : m.scaled(scale);
}

CatalogEntry fixed(std::string name, std::pair<int, int> gap, std::string base, std::vector<CMatrix> gens,
                   std::optional<std::vector<Cyclo>> phases = std::nullopt, std::string range = "") {
    CatalogEntry e;
    e.name = std::move(name);
    e.gap_id = gap;
    e.base_group = std::move(base);
    e.generators = std::move(gens);
    e.expected_entangling = false;
    e.expected_phase_values = std::move(phases);
    e.expected_phase_range = std::move(range);
    return e;
}

std::vector<CatalogEntry> fixed_entries() {
    const Cyclo &r = inv_sqrt2();
    Cyclo half(Rational(1, 2));
    CMatrix s = CMatrix::diagonal({Cyclo::parse("-i"), Cyclo::parse("i")});
    std::vector<Cyclo> w3{Cyclo(1), Cyclo::root_of_unity(3, 1), Cyclo::root_of_unity(3, 2)};
    std::string w3_range = "{w3^j : j = 0, 1, 2}";
    std::vector<CatalogEntry> out;
    // Three inequivalent lifts of the tetrahedral group.
    out.push_back(fixed("tetrahedral-M1", {24, 3}, "tetrahedral", {mat({{"w8", "w8"}, {"w8^3", "w8^7"}}, r), s}, w3,
                        w3_range));
    out.push_back(fixed("tetrahedral-M2", {24, 3}, "tetrahedral",
                        {mat({{"w24^11", "w24^11"}, {"w24^17", "w24^5"}}, r), s}, w3, w3_range));
    out.push_back(fixed("tetrahedral-M3", {24, 3}, "tetrahedral",
                        {mat({{"w24^19", "w24^19"}, {"w24^1", "w24^13"}}, r), s}, w3, w3_range));
    out.push_back(fixed("tetrahedral-ext-72-25", {72, 25}, "tetrahedral",
                        {mat({{"w24^11", "w24^11"}, {"w24^17", "w24^5"}}, r),
                         CMatrix::diagonal({Cyclo::root_of_unity(12, 1), Cyclo::root_of_unity(12, 7)})}));
    out.push_back(fixed("octahedral-48-29", {48, 29}, "octahedral",
                        {mat({{"1", "-i"}, {"i", "-1"}}, r), mat({{"w8^3", "w8^7"}, {"w8^5", "w8^5"}}, r)},
                        std::vector<Cyclo>{Cyclo(1), Cyclo::parse("i")}, "{1, i}"));
    out.push_back(fixed("octahedral-96-192", {96, 192}, "octahedral",
                        {mat({{"1", "-i"}, {"i", "-1"}}, r), mat({{"w8^1", "w8^5"}, {"w8^3", "w8^3"}}, r)}));
    // GL(2) representations with entries in Q(w15); the second carries a factor 1/2.
    out.push_back(fixed("dodecahedral-120-5-rep1", {120, 5}, "dodecahedral",
                        {mat({{"w15-w15^2+w15^4-w15^8-w15^11-w15^14", "-2*w15-2*w15^4-w15^7-w15^13"},
                              {"-w15^11-w15^14", "-w15-w15^4-w15^7+w15^11-w15^13+w15^14"}}),
                         mat({{"-w15+w15^2-w15^4+w15^8+w15^11+w15^14", "w15+w15^4"},
                              {"w15^2+w15^8+2*w15^11+2*w15^14", "w15+w15^4+w15^7-w15^11+w15^13-w15^14"}})},
                        std::vector<Cyclo>{Cyclo(1)}, "{1}"));
    out.push_back(fixed(
        "dodecahedral-120-5-rep2", {120, 5}, "dodecahedral",
        {mat({{"-2*w15-2*w15^4-w15^7-w15^11-w15^13-w15^14", "2*w15^2+w15^7+2*w15^8+w15^11+w15^13+w15^14"},
              {"-w15^7+w15^11-w15^13+w15^14", "w15^7-w15^11+w15^13-w15^14"}},
             half),
         mat({{"w15+w15^2+w15^4+w15^7+w15^8+2*w15^11+w15^13+2*w15^14", "w15-w15^2+w15^4+w15^7-w15^8+w15^13"},
              {"w15-w15^2+w15^4+w15^7-w15^8+w15^13", "w15-w15^2+w15^4-w15^7-w15^8-w15^13"}},
             half)},
        std::vector<Cyclo>{Cyclo(1)}, "{1}"));
    return out;
}

CMatrix x_gate() {
    return CMatrix::parse({{"0", "1"}, {"1", "0"}});
}

}  // namespace

MatrixGroup CatalogEntry::close(const ClosureOptions &options) const {
    return MatrixGroup::close(generators, options, name);
}

CatalogEntry dihedral_odd(int n, int r) {
    if (n < 3 || n % 2 == 0) {
        fail(ErrorKind::InvalidInput, "dihedral-odd needs odd n >= 3, got " + std::to_string(n));
    }
    if (r < 1 || r >= n || std::gcd(r, n) != 1) {
        fail(ErrorKind::InvalidInput, "dihedral-odd needs 1 <= r < n with gcd(r, n) = 1");
    }
    CatalogEntry e;
    e.name = r == 1 ? "dihedral-odd(" + std::to_string(n) + ")"
                    : "dihedral-odd(" + std::to_string(n) + "," + std::to_string(r) + ")";
    e.base_group = "dihedral of order " + std::to_string(2 * n);
    e.generators = {CMatrix::diagonal({Cyclo::root_of_unity(n, r), Cyclo::root_of_unity(n, n - r)}), x_gate()};
    e.expected_entangling = false;
    e.expected_phase_values = std::vector<Cyclo>{Cyclo(1), Cyclo(-1)};
    e.expected_phase_range = "{1, -1}";
    return e;
}

CatalogEntry dihedral_odd_ext(int n) {
    if (n < 3 || n % 2 == 0) {
        fail(ErrorKind::InvalidInput, "dihedral-odd-ext needs odd n >= 3, got " + std::to_string(n));
    }
    CatalogEntry e;
    e.name = "dihedral-odd-ext(" + std::to_string(n) + ")";
    e.base_group = "dihedral of order " + std::to_string(2 * n);
    e.generators = {CMatrix::diagonal({Cyclo::root_of_unity(2 * n, 1), Cyclo::root_of_unity(2 * n, 2 * n - 1)}),
                    x_gate()};
    e.expected_entangling = false;
    return e;
}

CatalogEntry gm(int m) {
    if (m < 1) {
        fail(ErrorKind::InvalidInput, "Gm needs m >= 1");
    }
    CatalogEntry e;
    e.name = "Gm(" + std::to_string(m) + ")";
    e.base_group = m == 1 ? "klein four" : "dihedral of order " + std::to_string(4 * m);
    e.generators = {x_gate(), CMatrix::diagonal({Cyclo(1), Cyclo::root_of_unity(2 * m, 1)})};
    e.expected_entangling = true;
    return e;
}

CatalogEntry binary_dihedral(int n, int r) {
    if (n < 1 || r < 1 || std::gcd(r, 2 * n) != 1) {
        fail(ErrorKind::InvalidInput, "binary-dihedral needs n >= 1 and gcd(r, 2n) = 1");
    }
    CatalogEntry e;
    e.name = "binary-dihedral(" + std::to_string(n) + "," + std::to_string(r) + ")";
    e.base_group = n == 1 ? "cyclic" : "dihedral of order " + std::to_string(2 * n);
    e.generators = {
        CMatrix::diagonal({Cyclo::root_of_unity(2 * n, r), Cyclo::root_of_unity(2 * n, 2 * n - (r % (2 * n)))}),
        CMatrix::from_rows({{Cyclo(0), Cyclo(r % 2 == 0 ? 1 : -1)}, {Cyclo(1), Cyclo(0)}})};
    // Even n gives a central extension of some G_m up to phases; odd n has an odd-dihedral quotient.
    e.expected_entangling = n % 2 == 0;
    return e;
}

CatalogEntry pauli() {
    CatalogEntry e;
    e.name = "pauli";
    e.gap_id = std::make_pair(16, 13);
    e.base_group = "klein four";
    e.generators = {x_gate(), CMatrix::diagonal({1, -1}), CMatrix::identity(2).scaled(Cyclo::parse("i"))};
    e.expected_entangling = true;
    return e;
}

std::vector<CatalogEntry> catalog_entries() {
    auto out = fixed_entries();
    for (int n : {3, 5, 7}) {
        out.push_back(dihedral_odd(n));
    }
    for (int n : {3, 5, 7}) {
        out.push_back(dihedral_odd_ext(n));
    }
    for (int m : {1, 2, 3, 4}) {
        out.push_back(gm(m));
    }
    out.push_back(binary_dihedral(2, 1));
    out.push_back(binary_dihedral(4, 1));
    out.push_back(binary_dihedral(4, 3));
    out.push_back(pauli());
    return out;
}

std::optional<CatalogEntry> find_entry(const std::string &name) {
    if (name == "pauli") {
        return pauli();
    }
    for (auto &e : fixed_entries()) {
        if (e.name == name) {
            return e;
        }
    }
    static const std::regex family(R"(^([A-Za-z-]+)\((\d+)(?:,(\d+))?\)$)");
    std::smatch m;
    if (!std::regex_match(name, m, family)) {
        return std::nullopt;
    }
    std::string f = m[1];
    int a = std::stoi(m[2]);
    bool has_b = m[3].matched;
    int b = has_b ? std::stoi(m[3]) : 0;
    if (f == "dihedral-odd") {
        return dihedral_odd(a, has_b ? b : 1);
    }
    if (f == "dihedral-odd-ext" && !has_b) {
        return dihedral_odd_ext(a);
    }
    if (f == "Gm" && !has_b) {
        return gm(a);
    }
    if (f == "binary-dihedral" && has_b) {
        return binary_dihedral(a, b);
    }
    return std::nullopt;
}

int schur_multiplier_dihedral(int n) {
    if (n < 1) {
        fail(ErrorKind::InvalidInput, "n must be positive");
    }
    return std::gcd(2, n);
}

BaseGroupInfo base_group_of(const MatrixGroup &group) {
    if (group.dim() != 2) {
        fail(ErrorKind::UnrecognizedBaseGroup,
             "base groups are only catalogued for d = 2, got d = " + std::to_string(group.dim()));
    }
    BaseGroupInfo info;
    std::size_t z = group.centre().size();
    info.order = group.order() / z;
    // Orders in G/Z(G): least k with g^k central. For irreducible groups the centre is scalar.
    std::vector<char> central(group.order(), 0);
    for (auto c : group.centre()) {
        central[c] = 1;
    }
    std::vector<char> covered(group.order(), 0);
    for (std::size_t x = 0; x < group.order(); x++) {
        if (covered[x]) {
            continue;
        }
        for (auto c : group.centre()) {
            covered[group.multiply(x, c)] = 1;
        }
        std::size_t cur = x;
        int k = 1;
        while (!central[cur]) {
            cur = group.multiply(cur, x);
            k++;
        }
        info.order_statistics[k]++;
    }
    auto count = [&](int k) {
        auto it = info.order_statistics.find(k);
        return it == info.order_statistics.end() ? 0 : it->second;
    };
    std::size_t q = info.order;
    int max_order = info.order_statistics.rbegin()->first;
    if (static_cast<std::size_t>(max_order) == q) {
        info.family = "cyclic";
        info.description = "cyclic of order " + std::to_string(q);
    } else if (q == 4 && count(2) == 3) {
        info.family = "klein-four";
        info.description = "klein four (dihedral of order 4)";
    } else if (q == 12 && count(2) == 3 && count(3) == 8) {
        info.family = "tetrahedral";
        info.description = "tetrahedral A4";
    } else if (q == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6) {
        info.family = "octahedral";
        info.description = "octahedral S4";
    } else if (q == 60 && count(2) == 15 && count(3) == 20 && count(5) == 24) {
        info.family = "dodecahedral";
        info.description = "dodecahedral A5";
    } else if (q % 2 == 0 && static_cast<std::size_t>(max_order) == q / 2 &&
               count(2) == static_cast<int>(q / 2 + (q % 4 == 0 ? 1 : 0))) {
        info.family = "dihedral";
        info.description = "dihedral of order " + std::to_string(q);
    } else {
        fail(ErrorKind::UnrecognizedBaseGroup,
             "central quotient of order " + std::to_string(q) + " matches no finite subgroup of PU(2)");
    }
    return info;
}

std::vector<Cyclo> phase_values(const std::vector<PhaseFunction> &phases) {
    std::vector<Cyclo> out;
    std::set<std::string> seen;
    for (const auto &f : phases) {
        for (std::size_t t = 0; t < f.exponents.size(); t++) {
            Cyclo v = f.value(t).canonical();
            if (seen.insert(v.str()).second) {
                out.push_back(v);
            }
        }
    }
    return out;
}

std::vector<Cyclo> phase_value_cosets(const std::vector<Cyclo> &values, int s) {
    std::vector<Cyclo> out;
    std::set<std::string> seen;
    for (const auto &v : values) {
        Cyclo k = v.pow(s).canonical();
        if (seen.insert(k.str()).second) {
            out.push_back(k);
        }
    }
    std::sort(out.begin(), out.end(), [](const Cyclo &a, const Cyclo &b) { return a.str() < b.str(); });
    return out;
}

bool ClassificationTable::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const ClassificationRow &r) { return r.matches(); });
}

std::vector<CatalogEntry> classification_entries(const ClassificationConfig &config) {
    auto out = fixed_entries();
    for (int n : config.odd_n) {
        out.push_back(dihedral_odd(n));
    }
    for (int m : config.m) {
        out.push_back(gm(m));
    }
    return out;
}

ClassificationRow classify_entry(const CatalogEntry &entry, const NormaliserOptions &options) {
    auto start = std::chrono::steady_clock::now();
    ClassificationRow row;
    row.name = entry.name;
    row.expected = entry.expected_entangling;
    row.expected_phase_range = entry.expected_phase_range;
    MatrixGroup g = entry.close(options.closure);
    row.order = g.order();
    row.centre_order = static_cast<int>(g.centre().size());
    BaseGroupInfo base = base_group_of(g);
    row.base_order = base.order;
    row.base_family = base.family;
    int s = static_cast<int>(g.scalars().size());
    row.phase_values = phase_values(compute_phase_functions(g));
    if (entry.expected_phase_values) {
        row.phase_range_matches =
            phase_value_cosets(row.phase_values, s) == phase_value_cosets(*entry.expected_phase_values, s);
    }
    NormaliserReport report = classify_entangling(g, options);
    row.searched_order = report.searched_order;
    row.tensor_order = report.group_order;
    row.representatives = report.found.size();
    row.normaliser_count = report.assignment_count;
    row.entangling = report.any_entangling();
    for (const auto &f : report.found) {
        if (f.entangling && row.entangling_examples.size() < 3) {
            row.entangling_examples.push_back(f.matrix.canonical().str());
        }
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

ClassificationTable classify_catalog(const ClassificationConfig &config) {
    ClassificationTable table;
    for (const auto &e : classification_entries(config)) {
        table.rows.push_back(classify_entry(e, config.options));
    }
    return table;
}

ClassificationTable run_u2_classification(const ClassificationConfig &config) {
    ClassificationTable table = classify_catalog(config);
    for (const auto &r : table.rows) {
        if (!r.matches()) {
            fail(ErrorKind::MismatchAgainstPaper,
                 r.name + ": entangling = " + (r.entangling ? "true" : "false") + ", expected " +
                     (r.expected ? "true" : "false") +
                     (r.phase_range_matches == std::optional<bool>(false) ? "; phase range differs" : ""));
        }
    }
    return table;
}

}  // namespace gencliff
