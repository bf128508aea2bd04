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

#include "gencliff/io.hpp"

#include <fstream>
#include <sstream>

#include "gencliff/error.hpp"

namespace gencliff {

namespace {

Cyclo cyclo_from_json(const Json &j) {
    if (j.is_string()) {
        return Cyclo::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Cyclo(j.get<long long>());
    }
    fail(ErrorKind::ParseError, "expected a cyclotomic literal, got " + j.dump());
}

const Json &need(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        fail(ErrorKind::ParseError, where + ": missing \"" + key + "\"");
    }
    return j.at(key);
}

int need_int(const Json &j, const char *key, const std::string &where) {
    const Json &v = need(j, key, where);
    if (!v.is_number_integer()) {
        fail(ErrorKind::ParseError, where + ": \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

Json cyclos_to_json(const std::vector<Cyclo> &v) {
    Json out = Json::array();
    for (const auto &c : v) {
        out.push_back(c.str());
    }
    return out;
}

std::string centre_label(const CentreInfo &c) {
    switch (c.s) {
        case 1:
            return "<I>";
        case 2:
            return "<-I>";
        case 4:
            return "<iI>";
        default:
            return "<w" + std::to_string(c.s) + " I>";
    }
}

Json group_generators(const MatrixGroup &g) {
    Json out = Json::array();
    for (const auto &m : g.generators()) {
        out.push_back(matrix_to_json(m));
    }
    return out;
}

}  // namespace

CMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        fail(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
    }
    std::vector<std::vector<Cyclo>> rows;
    for (const auto &r : j) {
        if (!r.is_array() || r.size() != j.size()) {
            fail(ErrorKind::DimensionMismatch, "matrix must be square: " + j.dump());
        }
        std::vector<Cyclo> row;
        for (const auto &e : r) {
            row.push_back(cyclo_from_json(e));
        }
        rows.push_back(std::move(row));
    }
    return CMatrix::from_rows(rows);
}

Json matrix_to_json(const CMatrix &m) {
    Json out = Json::array();
    for (const auto &row : m.to_strings()) {
        out.push_back(row);
    }
    return out;
}

std::vector<Cyclo> vector_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        fail(ErrorKind::ParseError, "state must be a non-empty array of amplitudes");
    }
    std::vector<Cyclo> v;
    for (const auto &e : j) {
        v.push_back(cyclo_from_json(e));
    }
    return v;
}

Json vector_to_json(const std::vector<Cyclo> &v) {
    return cyclos_to_json(v);
}

GroupSpec group_spec_from_json(const Json &j) {
    GroupSpec g;
    g.dim = need_int(j, "dim", "group");
    if (j.contains("name")) {
        g.name = j.at("name").get<std::string>();
    }
    const Json &gens = need(j, "generators", "group");
    if (!gens.is_array() || gens.empty()) {
        fail(ErrorKind::ParseError, "group: \"generators\" must be a non-empty array");
    }
    for (std::size_t k = 0; k < gens.size(); k++) {
        const Json &e = gens[k];
        CMatrix m;
        try {
            if (e.is_object()) {
                m = matrix_from_json(need(e, "matrix", "generator " + std::to_string(k)));
                if (e.contains("scale")) {
                    m = m.scaled(cyclo_from_json(e.at("scale")));
                }
            } else {
                m = matrix_from_json(e);
            }
        } catch (const Error &err) {
            fail(err.kind(), "generator " + std::to_string(k) + ": " + err.what());
        }
        if (m.dim() != g.dim) {
            fail(ErrorKind::DimensionMismatch, "generator " + std::to_string(k) + " is " + std::to_string(m.dim()) +
                                                   "x" + std::to_string(m.dim()) + ", dim is " +
                                                   std::to_string(g.dim));
        }
        g.generators.push_back(std::move(m));
    }
    return g;
}

Json group_spec_to_json(const GroupSpec &g) {
    Json out;
    out["dim"] = g.dim;
    out["name"] = g.name;
    Json gens = Json::array();
    for (const auto &m : g.generators) {
        gens.push_back(matrix_to_json(m));
    }
    out["generators"] = gens;
    return out;
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::InvalidInput, "cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

GroupSpec load_group_spec(const std::string &name_or_path) {
    if (auto e = find_entry(name_or_path)) {
        return {e->name, 2, e->generators};
    }
    if (!std::filesystem::exists(name_or_path)) {
        fail(ErrorKind::InvalidInput, "no catalog entry or file named " + name_or_path);
    }
    GroupSpec g = group_spec_from_json(read_json_file(name_or_path));
    if (g.name.empty()) {
        g.name = std::filesystem::path(name_or_path).stem().string();
    }
    return g;
}

MatrixGroup load_group(const std::string &name_or_path, const ClosureOptions &options) {
    GroupSpec g = load_group_spec(name_or_path);
    return MatrixGroup::close(g.generators, options, g.name);
}

CMatrix load_matrix(const std::string &name_or_path) {
    if (auto g = named_gate(name_or_path)) {
        return *g;
    }
    if (!std::filesystem::exists(name_or_path)) {
        fail(ErrorKind::InvalidInput, "no gate or file named " + name_or_path);
    }
    Json j = read_json_file(name_or_path);
    if (j.is_object()) {
        CMatrix m = matrix_from_json(need(j, "matrix", name_or_path));
        return j.contains("scale") ? m.scaled(cyclo_from_json(j.at("scale"))) : m;
    }
    return matrix_from_json(j);
}

CircuitFile circuit_from_json(const Json &j, const std::filesystem::path &base_dir, const ClosureOptions &options) {
    std::string gname = need(j, "group", "circuit").get<std::string>();
    std::string gpath = gname;
    if (!find_entry(gname)) {
        std::filesystem::path p(gname);
        if (p.is_relative()) {
            gpath = (base_dir / p).string();
        }
    }
    MatrixGroup group = load_group(gpath, options);
    int d = group.dim();
    int wires = need_int(j, "wires", "circuit");

    std::vector<std::vector<Cyclo>> input;
    if (j.contains("input")) {
        for (const auto &s : j.at("input")) {
            input.push_back(vector_from_json(s));
        }
    } else {
        std::vector<Cyclo> zero(d, Cyclo(0));
        zero[0] = Cyclo(1);
        input.assign(wires, zero);
    }

    std::vector<Gate> gates;
    if (j.contains("gates")) {
        const Json &gs = j.at("gates");
        for (std::size_t k = 0; k < gs.size(); k++) {
            const Json &e = gs[k];
            std::string where = "gate " + std::to_string(k);
            Gate g;
            const Json &name = need(e, "name", where);
            if (name.is_string()) {
                auto m = named_gate(name.get<std::string>());
                if (!m) {
                    fail(ErrorKind::InvalidInput, where + ": unknown gate " + name.get<std::string>());
                }
                g.matrix = *m;
                g.label = name.get<std::string>();
            } else {
                g.matrix = matrix_from_json(name);
            }
            if (e.contains("scale")) {
                g.matrix = g.matrix.scaled(cyclo_from_json(e.at("scale")));
            }
            for (const auto &w : need(e, "wires", where)) {
                g.wires.push_back(w.get<int>());
            }
            if (e.contains("mode")) {
                std::string mode = e.at("mode").get<std::string>();
                if (mode == "linear") {
                    g.mode = Mode::Linear;
                } else if (mode != "projective") {
                    fail(ErrorKind::ParseError, where + ": mode must be linear or projective");
                }
            }
            if (e.contains("condition")) {
                g.condition = e.at("condition").get<int>();
            }
            gates.push_back(std::move(g));
        }
    }

    std::vector<Measurement> meas;
    if (j.contains("measure")) {
        for (const auto &m : j.at("measure")) {
            Measurement x;
            x.wire = need_int(m, "wire", "measure");
            x.after = m.contains("after") ? m.at("after").get<std::size_t>() : gates.size();
            meas.push_back(x);
        }
    }

    CircuitFile out{Circuit::build(group, wires, std::move(input), std::move(gates), std::move(meas)), {}, {}, false};
    if (j.contains("observable")) {
        const Json &o = j.at("observable");
        out.wire = need_int(o, "wire", "observable");
        if (o.contains("matrix")) {
            out.observable = matrix_from_json(o.at("matrix"));
        } else {
            std::string n = need(o, "name", "observable").get<std::string>();
            auto m = named_gate(n);
            if (!m) {
                fail(ErrorKind::InvalidInput, "observable: unknown gate " + n);
            }
            out.observable = *m;
        }
        out.hermitian_wrapper = o.value("hermitian", false);
    }
    return out;
}

CircuitFile load_circuit(const std::filesystem::path &path, const ClosureOptions &options) {
    try {
        return circuit_from_json(read_json_file(path), path.parent_path(), options);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

Json closure_to_json(const MatrixGroup &g) {
    Json out;
    out["name"] = g.name();
    out["dim"] = g.dim();
    out["order"] = g.order();
    out["irreducible"] = g.is_irreducible();
    Json centre;
    centre["order"] = g.centre().size();
    try {
        CentreInfo c = compute_centre(g);
        centre["scalar"] = true;
        centre["generator"] = centre_label(c);
        centre["min_phase"] = c.min_phase.str();
    } catch (const Error &) {
        centre["scalar"] = false;
    }
    out["centre"] = centre;
    if (g.dim() == 2 && g.is_irreducible()) {
        try {
            BaseGroupInfo b = base_group_of(g);
            out["base_group"] = {{"order", b.order}, {"family", b.family}};
        } catch (const Error &) {
            out["base_group"] = nullptr;
        }
    }
    out["generators"] = group_generators(g);
    return out;
}

Json normaliser_report_to_json(const NormaliserReport &r) {
    Json out;
    out["group"] = r.group_name;
    out["target"] = target_name(r.target);
    out["mode"] = mode_name(r.mode);
    out["group_order"] = r.group_order;
    out["searched_order"] = r.searched_order;
    out["extension_phase_order"] = r.extension_phase_order;
    out["representatives"] = r.found.size();
    out["assignment_count"] = r.assignment_count;
    out["degenerate"] = r.degenerate;
    out["irreducible"] = r.irreducible;
    out["any_entangling"] = r.any_entangling();
    Json phases = Json::array();
    for (const auto &f : r.phase_functions) {
        std::vector<Cyclo> vals;
        for (std::size_t t = 0; t < f.exponents.size(); t++) {
            vals.push_back(f.value(t));
        }
        phases.push_back(cyclos_to_json(vals));
    }
    out["phase_functions"] = phases;
    Json found = Json::array();
    for (const auto &f : r.found) {
        Json rec;
        rec["matrix"] = matrix_to_json(f.matrix);
        Json images = Json::array();
        for (const auto &m : f.images) {
            images.push_back(matrix_to_json(m));
        }
        rec["images"] = images;
        rec["phase_function"] = f.phase_function ? cyclos_to_json(*f.phase_function) : Json(nullptr);
        rec["entangling"] = f.entangling;
        rec["verified"] = f.verified;
        found.push_back(rec);
    }
    out["found"] = found;
    out["stats"] = {{"candidates", r.stats.candidates},   {"pruned_order", r.stats.pruned_order},
                    {"pruned_trace", r.stats.pruned_trace}, {"empty_nullspace", r.stats.empty_nullspace},
                    {"singular", r.stats.singular},       {"leaves", r.stats.leaves},
                    {"duplicates", r.stats.duplicates}};
    out["notes"] = r.notes;
    return out;
}

Json classification_to_json(const ClassificationTable &t) {
    Json rows = Json::array();
    for (const auto &r : t.rows) {
        Json row;
        row["name"] = r.name;
        row["order"] = r.order;
        row["centre_order"] = r.centre_order;
        row["base_order"] = r.base_order;
        row["base_family"] = r.base_family;
        row["tensor_order"] = r.tensor_order;
        row["searched_order"] = r.searched_order;
        row["representatives"] = r.representatives;
        row["normaliser_count"] = r.normaliser_count;
        row["entangling"] = r.entangling;
        row["expected"] = r.expected;
        row["entangling_examples"] = r.entangling_examples;
        row["phase_values"] = cyclos_to_json(r.phase_values);
        row["expected_phase_range"] = r.expected_phase_range;
        row["phase_range_matches"] = r.phase_range_matches ? Json(*r.phase_range_matches) : Json(nullptr);
        row["matches"] = r.matches();
        rows.push_back(row);
    }
    Json out;
    out["all_match"] = t.all_match();
    out["rows"] = rows;
    return out;
}

Json expectation_to_json(const ExpectationResult &r) {
    Json out;
    out["expectation"] = r.value.str();
    out["expectation_numeric"] = r.value.to_complex().real();
    out["hermitian"] = r.hermitian;
    out["wrapped"] = r.wrapped;
    out["p0"] = r.p0 ? Json(r.p0->str()) : Json(nullptr);
    out["p1"] = r.p1 ? Json(r.p1->str()) : Json(nullptr);
    out["ancillas"] = r.ancillas;
    out["stats"] = {{"gates", r.stats.gates}, {"lookups", r.stats.lookups}, {"tables", r.stats.tables}};
    return out;
}

Json teleportation_to_json(const TeleportationReport &r, const std::vector<Cyclo> &state) {
    Json out;
    out["state"] = cyclos_to_json(state);
    out["group_order"] = r.group_order;
    out["complete"] = r.complete;
    out["rank_one"] = r.rank_one;
    out["all_ok"] = r.all_ok();
    Json outcomes = Json::array();
    for (const auto &o : r.outcomes) {
        std::ostringstream f;
        f.precision(12);
        f << o.fidelity;
        outcomes.push_back({{"index", o.index},
                            {"probability", o.probability.str()},
                            {"state_matches", o.state_matches},
                            {"fidelity", f.str()}});
    }
    out["outcomes"] = outcomes;
    return out;
}

}  // namespace gencliff
