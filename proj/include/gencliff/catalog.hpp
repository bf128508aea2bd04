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

#ifndef GENCLIFF_CATALOG_HPP
#define GENCLIFF_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencliff/cmatrix.hpp"
#include "gencliff/matrix_group.hpp"
#include "gencliff/normaliser.hpp"

namespace gencliff {

/// A finite subgroup of U(2) (or GL(2)) with its known classification data.
struct CatalogEntry {
    std::string name;
    std::optional<std::pair<int, int>> gap_id;  // [order, index] in the small-group library
    std::string base_group;
    std::vector<CMatrix> generators;
    bool expected_entangling = false;
    /// Expected phase-function values, compared modulo the centre's phases.
    std::optional<std::vector<Cyclo>> expected_phase_values;
    std::string expected_phase_range;

    MatrixGroup close(const ClosureOptions &options = {}) const;
};

/// Fixed entries, then default samples of every family.
std::vector<CatalogEntry> catalog_entries();

/// Looks up a fixed entry or builds a family member from names such as
/// "Gm(3)", "dihedral-odd(5)", "dihedral-odd(5,2)", "binary-dihedral(4,3)".
std::optional<CatalogEntry> find_entry(const std::string &name);

/// <diag(w_n^r, w_n^-r), X> for odd n >= 3, gcd(r, n) = 1.
CatalogEntry dihedral_odd(int n, int r = 1);
/// <diag(w_2n, w_2n^-1), X>, the odd-dihedral group with -I adjoined.
CatalogEntry dihedral_odd_ext(int n);
/// <X, diag(1, w_2m)>.
CatalogEntry gm(int m);
/// a -> diag(w_2n^r, w_2n^-r), b -> [[0, (-1)^r], [1, 0]] with gcd(r, 2n) = 1.
CatalogEntry binary_dihedral(int n, int r);
/// <X, Z, iI>.
CatalogEntry pauli();

/// Order of the Schur multiplier of the dihedral group of order 2n.
int schur_multiplier_dihedral(int n);

struct BaseGroupInfo {
    std::size_t order = 0;  // |G / Z(G)|
    std::string family;     // cyclic, dihedral, klein-four, tetrahedral, octahedral, dodecahedral
    std::string description;
    std::map<int, int> order_statistics;  // element order in G/Z(G) -> count
};
/// Throws UnrecognizedBaseGroup for d != 2 or an unmatched quotient.
BaseGroupInfo base_group_of(const MatrixGroup &group);

/// Phase-function values v, reduced to the coset key v^s.
std::vector<Cyclo> phase_value_cosets(const std::vector<Cyclo> &values, int s);
/// Distinct values taken by the admissible phase functions.
std::vector<Cyclo> phase_values(const std::vector<PhaseFunction> &phases);

struct ClassificationConfig {
    std::vector<int> odd_n{3, 5, 7};
    std::vector<int> m{1, 2, 3, 4};
    NormaliserOptions options;
};

struct ClassificationRow {
    std::string name;
    std::size_t order = 0;
    int centre_order = 0;
    std::size_t base_order = 0;
    std::string base_family;
    std::size_t tensor_order = 0;
    std::size_t searched_order = 0;
    std::size_t representatives = 0;
    std::size_t normaliser_count = 0;
    bool entangling = false;
    bool expected = false;
    std::vector<std::string> entangling_examples;
    std::vector<Cyclo> phase_values;
    std::string expected_phase_range;
    std::optional<bool> phase_range_matches;
    double seconds = 0;

    bool matches() const {
        return entangling == expected && phase_range_matches.value_or(true);
    }
};

struct ClassificationTable {
    std::vector<ClassificationRow> rows;
    bool all_match() const;
};

/// Entries covered by the classification run for `config`.
std::vector<CatalogEntry> classification_entries(const ClassificationConfig &config);

/// Classifies every entry and records its verdict; never throws on a mismatch.
ClassificationTable classify_catalog(const ClassificationConfig &config = {});

ClassificationRow classify_entry(const CatalogEntry &entry, const NormaliserOptions &options);

/// classify_catalog, throwing MismatchAgainstPaper if any verdict disagrees.
ClassificationTable run_u2_classification(const ClassificationConfig &config = {});

}  // namespace gencliff

#endif
