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

// Command-line front end: closure, normalisers, the U(2) classification,
// circuit simulation and teleportation checks.

#include <CLI11.hpp>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "gencliff/catalog.hpp"
#include "gencliff/error.hpp"
#include "gencliff/io.hpp"
#include "gencliff/normaliser.hpp"
#include "gencliff/simulator.hpp"

namespace {

using namespace gencliff;

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kBudget = 3 };

struct Globals {
    std::string format = "human";
    std::size_t budget_order = 10000;
    std::size_t budget_assignments = 10'000'000;
    std::uint64_t seed = 1;

    bool structured() const {
        return format == "structured";
    }
    NormaliserOptions options() const {
        NormaliserOptions o;
        o.closure.max_order = budget_order;
        o.max_assignments = budget_assignments;
        return o;
    }
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::ClosureBudgetExceeded:
        case ErrorKind::SearchBudgetExceeded:
        case ErrorKind::ConductorLimitExceeded:
            return kBudget;
        case ErrorKind::MismatchAgainstPaper:
            return kMismatch;
        default:
            return kInputError;
    }
}

void emit(const Json &j) {
    std::cout << j.dump(2) << "\n";
}

std::string yes(bool b) {
    return b ? "true" : "false";
}

int cmd_closure(const Globals &g, const std::string &group) {
    MatrixGroup grp = load_group(group, g.options().closure);
    Json j = closure_to_json(grp);
    if (g.structured()) {
        emit(j);
        return kOk;
    }
    std::cout << grp.name() << ": order " << grp.order() << ", "
              << (grp.is_irreducible() ? "irreducible" : "reducible") << ", centre ";
    if (j["centre"]["scalar"].get<bool>()) {
        std::cout << j["centre"]["generator"].get<std::string>();
    } else {
        std::cout << "non-scalar of order " << grp.centre().size();
    }
    std::cout << "\n";
    if (j.contains("base_group") && !j["base_group"].is_null()) {
        std::cout << "base group: " << j["base_group"]["family"].get<std::string>() << " of order "
                  << j["base_group"]["order"] << "\n";
    }
    return kOk;
}

int cmd_normaliser(const Globals &g, const std::string &group, bool projective, bool tensor, bool expand) {
    NormaliserOptions o = g.options();
    o.expand_inner = expand;
    MatrixGroup grp = load_group(group, o.closure);
    NormaliserReport r;
    if (tensor) {
        MatrixGroup sq = tensor_square(grp, o.closure).with_name(grp.name() + " (x) " + grp.name());
        r = projective ? classify_entangling(grp, o) : find_normalisers(sq, o);
    } else {
        r = projective ? find_projective_normalisers(grp, o) : find_normalisers(grp, o);
    }
    if (g.structured()) {
        emit(normaliser_report_to_json(r));
        return kOk;
    }
    std::cout << r.group_name << " [" << target_name(r.target) << ", " << mode_name(r.mode) << "]: order "
              << r.group_order << ", searched " << r.searched_order << "\n";
    std::cout << r.found.size() << " representatives, " << r.assignment_count << " normalisers modulo scalars";
    if (tensor) {
        std::cout << ", entangling: " << yes(r.any_entangling());
    }
    std::cout << "\n";
    for (const auto &n : r.notes) {
        std::cout << "note: " << n << "\n";
    }
    for (std::size_t k = 0; k < r.found.size(); k++) {
        const auto &f = r.found[k];
        std::cout << "  [" << k << "]" << (f.entangling ? " entangling" : "") << " " << f.matrix.str() << "\n";
    }
    return kOk;
}

int cmd_entangling(const Globals &g, const std::string &matrix) {
    CMatrix m = load_matrix(matrix);
    bool e = is_entangling(m);
    if (g.structured()) {
        emit(Json{{"matrix", matrix_to_json(m)}, {"entangling", e}});
    } else {
        std::cout << "entangling: " << yes(e) << "\n";
    }
    return kOk;
}

int cmd_classify(const Globals &g, const std::vector<int> &odd_n, const std::vector<int> &ms) {
    ClassificationConfig cfg;
    cfg.odd_n = odd_n;
    cfg.m = ms;
    cfg.options = g.options();
    ClassificationTable t = classify_catalog(cfg);
    if (g.structured()) {
        emit(classification_to_json(t));
    } else {
        std::cout << std::left << std::setw(26) << "group" << std::setw(6) << "|G|" << std::setw(4) << "s"
                  << std::setw(18) << "base" << std::setw(8) << "|G'xG'|" << std::setw(7) << "reps"
                  << std::setw(11) << "entangling" << std::setw(9) << "expected"
                  << "verdict\n";
        for (const auto &r : t.rows) {
            std::ostringstream base;
            base << r.base_family << "/" << r.base_order;
            std::cout << std::setw(26) << r.name << std::setw(6) << r.order << std::setw(4) << r.centre_order
                      << std::setw(18) << base.str() << std::setw(8) << r.searched_order << std::setw(7)
                      << r.representatives << std::setw(11) << yes(r.entangling) << std::setw(9) << yes(r.expected)
                      << (r.matches() ? "ok" : "MISMATCH") << std::fixed << std::setprecision(2) << "  "
                      << r.seconds << "s\n";
        }
        std::cout << (t.all_match() ? "all verdicts match" : "verdict mismatch") << "\n";
    }
    return t.all_match() ? kOk : kMismatch;
}

int cmd_simulate(const Globals &g, const std::string &path, std::optional<int> wire, const std::string &obs,
                 bool hermitian) {
    CircuitFile f = load_circuit(path, g.options().closure);
    if (wire) {
        f.wire = wire;
    }
    if (!obs.empty()) {
        f.observable = load_matrix(obs);
    }
    if (!f.wire || !f.observable) {
        fail(ErrorKind::InvalidInput, "no observable: give --wire and --observable or an \"observable\" entry");
    }
    ExpectationOptions o;
    o.hermitian_wrapper = hermitian || f.hermitian_wrapper;
    ExpectationResult r = expectation(f.circuit, *f.wire, *f.observable, o);
    if (g.structured()) {
        emit(expectation_to_json(r));
        return kOk;
    }
    std::cout << "expectation: " << r.value.str() << " (" << r.value.to_complex().real() << ")\n";
    if (!r.hermitian) {
        std::cout << "warning: observable is not Hermitian; value may be complex. Use --hermitian for A + A^dagger\n";
    }
    if (r.p0) {
        std::cout << "p0: " << r.p0->str() << "\np1: " << r.p1->str() << "\n";
    }
    std::cout << "propagation: " << r.stats.gates << " gates, " << r.stats.lookups << " lookups, " << r.stats.tables
              << " tables";
    if (r.ancillas > 0) {
        std::cout << ", " << r.ancillas << " measurement ancillas";
    }
    std::cout << "\n";
    return kOk;
}

std::vector<Cyclo> parse_state(const std::string &s) {
    std::vector<Cyclo> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        v.push_back(Cyclo::parse(item));
    }
    return v;
}

// Unit vectors with exact amplitudes: Pythagorean pairs with a root-of-unity phase for
// qubits, phased basis and uniform states otherwise.
std::vector<Cyclo> sample_state(std::mt19937_64 &rng, int d) {
    if (d == 2) {
        long long m = 2 + static_cast<long long>(rng() % 6);
        long long n = 1 + static_cast<long long>(rng() % (m - 1));
        long long c = m * m + n * n;
        Cyclo a(Rational(m * m - n * n, c));
        Cyclo b = Cyclo(Rational(2 * m * n, c)) * Cyclo::root_of_unity(8, static_cast<long long>(rng() % 8));
        if (rng() % 2 == 0) {
            std::swap(a, b);
        }
        return {a, b};
    }
    std::vector<Cyclo> v(d, Cyclo(0));
    if (rng() % 2 == 0) {
        v[rng() % d] = Cyclo::root_of_unity(8, static_cast<long long>(rng() % 8));
        return v;
    }
    for (auto &x : v) {
        x = inv_sqrt_dim(d) * Cyclo::root_of_unity(8, static_cast<long long>(rng() % 8));
    }
    return v;
}

int cmd_teleport(const Globals &g, const std::string &group, int samples, const std::vector<std::string> &states) {
    MatrixGroup grp = load_group(group, g.options().closure);
    TeleportationPovm povm = build_teleportation_povm(grp);
    std::vector<std::vector<Cyclo>> alphas;
    for (const auto &s : states) {
        alphas.push_back(parse_state(s));
    }
    std::mt19937_64 rng(g.seed);
    for (int k = 0; k < samples; k++) {
        alphas.push_back(sample_state(rng, grp.dim()));
    }
    bool ok = povm.complete && povm.rank_one;
    Json runs = Json::array();
    for (const auto &a : alphas) {
        TeleportationReport r = verify_teleportation(povm, grp, a);
        ok = ok && r.all_ok();
        runs.push_back(teleportation_to_json(r, a));
        if (!g.structured()) {
            std::ostringstream st;
            for (std::size_t i = 0; i < a.size(); i++) {
                st << (i ? ", " : "") << a[i].str();
            }
            std::size_t matched = 0;
            for (const auto &o : r.outcomes) {
                matched += o.state_matches ? 1 : 0;
            }
            std::cout << "alpha = (" << st.str() << "): " << matched << "/" << r.outcomes.size()
                      << " outcomes give U_i alpha, probabilities " << (r.all_ok() ? "all 1/" : "NOT all 1/")
                      << r.group_order << "\n";
        }
    }
    if (g.structured()) {
        emit(Json{{"group", grp.name()},
                  {"order", grp.order()},
                  {"povm_elements", povm.elements.size()},
                  {"complete", povm.complete},
                  {"rank_one", povm.rank_one},
                  {"all_ok", ok},
                  {"runs", runs}});
    } else {
        std::cout << grp.name() << ": " << povm.elements.size() << " POVM elements, sum "
                  << (povm.complete ? "== I" : "!= I") << ", " << (ok ? "teleportation verified" : "FAILED") << "\n";
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entangling teleportation groups: normalisers, classification and simulation"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"human", "structured"}))
        ->envname("GENCLIFF_FORMAT");
    app.add_option("--budget-order", g.budget_order, "Largest group closure allowed")
        ->check(CLI::PositiveNumber)
        ->envname("GENCLIFF_BUDGET_ORDER");
    app.add_option("--budget-assignments", g.budget_assignments, "Largest number of candidate images searched")
        ->check(CLI::PositiveNumber)
        ->envname("GENCLIFF_BUDGET_ASSIGNMENTS");
    app.add_option("--seed", g.seed, "Seed for sampled test states")->envname("GENCLIFF_SEED");

    std::string group;
    std::string matrix;
    std::string path;
    bool tensor = false;
    bool expand = false;
    std::vector<int> odd_n{3, 5, 7};
    std::vector<int> ms{1, 2, 3, 4};
    std::optional<int> wire;
    std::string observable;
    bool hermitian = false;
    int samples = 5;
    std::vector<std::string> states;

    auto *closure = app.add_subcommand("closure", "Close a group and report order, irreducibility and centre");
    closure->add_option("group", group, "Catalog name or group file")->required();

    auto *norm = app.add_subcommand("normaliser", "Linear normalisers");
    auto *proj = app.add_subcommand("projective", "Projective normalisers");
    for (auto *s : {norm, proj}) {
        s->add_option("group", group, "Catalog name or group file")->required();
        s->add_flag("--tensor", tensor, "Target the tensor square G (x) G");
        s->add_flag("--expand", expand, "List every normaliser modulo scalars");
    }

    auto *ent = app.add_subcommand("entangling-test", "Is a two-qudit gate entangling?");
    ent->add_option("matrix", matrix, "Named gate or matrix file")->required();

    auto *cls = app.add_subcommand("classify-u2", "Classify the U(2) catalog");
    cls->add_option("--odd-n", odd_n, "Odd dihedral parameters")->delimiter(',');
    cls->add_option("--m", ms, "G_m parameters")->delimiter(',');

    auto *sim = app.add_subcommand("simulate", "Expectation value of a normaliser circuit");
    sim->add_option("circuit", path, "Circuit file")->required()->check(CLI::ExistingFile);
    sim->add_option("--wire", wire, "Observable wire");
    sim->add_option("--observable", observable, "Named gate or matrix file");
    sim->add_flag("--hermitian", hermitian, "Evaluate A + A^dagger");

    auto *tel = app.add_subcommand("teleport-check", "Verify generalised teleportation");
    tel->add_option("group", group, "Catalog name or group file")->required();
    tel->add_option("--samples", samples, "Number of sampled states")->check(CLI::NonNegativeNumber);
    tel->add_option("--state", states, "Comma-separated amplitudes; repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*closure) {
            return cmd_closure(g, group);
        }
        if (*norm || *proj) {
            return cmd_normaliser(g, group, static_cast<bool>(*proj), tensor, expand);
        }
        if (*ent) {
            return cmd_entangling(g, matrix);
        }
        if (*cls) {
            return cmd_classify(g, odd_n, ms);
        }
        if (*sim) {
            return cmd_simulate(g, path, wire, observable, hermitian);
        }
        if (*tel) {
            return cmd_teleport(g, group, samples, states);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error (ParseError): " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
