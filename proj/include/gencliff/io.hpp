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

#ifndef GENCLIFF_IO_HPP
#define GENCLIFF_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gencliff/catalog.hpp"
#include "gencliff/matrix_group.hpp"
#include "gencliff/normaliser.hpp"
#include "gencliff/simulator.hpp"
#include "json.hpp"

namespace gencliff {

using Json = nlohmann::ordered_json;

/// Group definition: { "dim": 2, "name": "...", "generators": [rows | {"matrix": rows, "scale": "..."}] }.
struct GroupSpec {
    std::string name;
    int dim = 0;
    std::vector<CMatrix> generators;
};

/// Rows of cyclotomic literals (numbers are accepted too). Throws ParseError, DimensionMismatch.
CMatrix matrix_from_json(const Json &j);
Json matrix_to_json(const CMatrix &m);
std::vector<Cyclo> vector_from_json(const Json &j);
Json vector_to_json(const std::vector<Cyclo> &v);

GroupSpec group_spec_from_json(const Json &j);
Json group_spec_to_json(const GroupSpec &g);

/// Reads JSON from a file. Throws ParseError, InvalidInput.
Json read_json_file(const std::filesystem::path &path);

/// A catalog name ("pauli", "Gm(3)", ...) or a group file.
GroupSpec load_group_spec(const std::string &name_or_path);
MatrixGroup load_group(const std::string &name_or_path, const ClosureOptions &options = {});

/// A named gate or a matrix file.
CMatrix load_matrix(const std::string &name_or_path);

/// Circuit file: { "group": name or path, "wires": n, "input": [...], "gates": [...],
/// "measure": [{"wire": w, "after": k}], "observable": {"wire": w, "name" | "matrix", "hermitian"} }.
struct CircuitFile {
    Circuit circuit;
    std::optional<int> wire;
    std::optional<CMatrix> observable;
    bool hermitian_wrapper = false;
};
/// Relative group paths resolve against base_dir.
CircuitFile circuit_from_json(const Json &j, const std::filesystem::path &base_dir, const ClosureOptions &options = {});
CircuitFile load_circuit(const std::filesystem::path &path, const ClosureOptions &options = {});

Json closure_to_json(const MatrixGroup &g);
Json normaliser_report_to_json(const NormaliserReport &r);
Json classification_to_json(const ClassificationTable &t);
Json expectation_to_json(const ExpectationResult &r);
Json teleportation_to_json(const TeleportationReport &r, const std::vector<Cyclo> &state);

}  // namespace gencliff

#endif
