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

#ifndef GENCLIFF_NORMALISER_HPP
#define GENCLIFF_NORMALISER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencliff/cmatrix.hpp"
#include "gencliff/matrix_group.hpp"

namespace gencliff {

/// Joint solution space of N U = U' N over all pairs, as matrices. The first nonzero
/// entry (row-major) of each basis matrix is 1. Throws DimensionMismatch.
std::vector<CMatrix> kron_constraint_nullspace(const std::vector<std::pair<CMatrix, CMatrix>> &pairs);

/// f(U_t) = w_{moduli[t]}^{exponents[t]} for each generator U_t.
struct PhaseFunction {
    std::vector<int> exponents;
    std::vector<int> moduli;

    Cyclo value(std::size_t t) const;
    bool is_trivial() const;
};

/// Every admissible phase function on the group's generators, in the window
/// 0 <= arg f(U_t) < 2 pi / s. The trivial one comes first.
std::vector<PhaseFunction> compute_phase_functions(const MatrixGroup &group);

/// Order K of the scalar group generated by w_s and every admissible phase value.
int phase_extension_order(const MatrixGroup &group, const std::vector<PhaseFunction> &phases);

/// True iff V is neither A (x) B nor SWAP (A (x) B). Throws NotSquareOfSquare.
bool is_entangling(const CMatrix &v);

struct NormaliserOptions {
    ClosureOptions closure;
    /// Cap on candidate images tried during the search.
    std::size_t max_assignments = 10'000'000;
    /// List every coset of the normaliser modulo scalars instead of one per coset of G C*.
    bool expand_inner = false;
};

enum class Target { G, GTensorG };
enum class Mode { Linear, Projective };

struct NormaliserRecord {
    CMatrix matrix;
    /// Images of the group's generators: matrix * gen_t * matrix^-1 = phase_t * images[t].
    std::vector<CMatrix> images;
    std::optional<std::vector<Cyclo>> phase_function;
    bool entangling = false;
    bool verified = false;
};

struct SearchStats {
    std::size_t candidates = 0;
    std::size_t pruned_order = 0;
    std::size_t pruned_trace = 0;
    std::size_t empty_nullspace = 0;
    std::size_t singular = 0;
    std::size_t leaves = 0;
    std::size_t duplicates = 0;
};

struct NormaliserReport {
    std::string group_name;
    Target target = Target::G;
    Mode mode = Mode::Linear;
    std::size_t group_order = 0;
    /// Order of the group actually searched (the phase extension in projective mode).
    std::size_t searched_order = 0;
    int extension_phase_order = 1;
    std::vector<NormaliserRecord> found;
    /// Number of normaliser elements modulo scalars.
    std::size_t assignment_count = 0;
    bool degenerate = false;
    bool irreducible = true;
    std::vector<std::string> notes;
    SearchStats stats;
    std::vector<PhaseFunction> phase_functions;

    bool any_entangling() const;
};

/// Linear normalisers, one representative per coset of N(G) modulo G C* unless
/// expand_inner is set.
NormaliserReport find_normalisers(const MatrixGroup &group, const NormaliserOptions &options = {});

/// Projective normalisers, through the linear normalisers of the phase extension.
NormaliserReport find_projective_normalisers(const MatrixGroup &group, const NormaliserOptions &options = {});

/// Projective normalisers of the tensor square, each flagged entangling or not.
NormaliserReport classify_entangling(const MatrixGroup &group, const NormaliserOptions &options = {});

/// Checks m g m^-1 in C* G for every g in the group (projective) or in G (linear).
bool normalises(const CMatrix &m, const MatrixGroup &group, Mode mode);

const char *target_name(Target t);
const char *mode_name(Mode m);

}  // namespace gencliff

#endif
