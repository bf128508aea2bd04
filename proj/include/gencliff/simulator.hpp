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

#ifndef GENCLIFF_SIMULATOR_HPP
#define GENCLIFF_SIMULATOR_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gencliff/cmatrix.hpp"
#include "gencliff/matrix_group.hpp"
#include "gencliff/normaliser.hpp"

namespace gencliff {

/// Exact lookup g -> (c, g') with gate g gate^-1 = c g'. Arity 2 tables act on
/// pairs of base-group indices (g1 (x) g2).
class ConjugationTable {
   public:
    struct Entry {
        std::uint32_t first = 0;
        std::uint32_t second = 0;  // unused for arity 1
        std::int32_t phase = 0;    // c = w_{phase_order}^phase
    };

    int arity() const {
        return arity_;
    }
    /// All phases are powers of w_{phase_order}.
    int phase_order() const {
        return phase_order_;
    }
    std::size_t group_order() const {
        return n_;
    }
    const Entry &at(std::size_t g) const {
        return entries_[g];
    }
    const Entry &at(std::size_t g1, std::size_t g2) const {
        return entries_[g1 * n_ + g2];
    }
    Cyclo phase(const Entry &e) const;

   private:
    friend struct TableBuilder;
    int arity_ = 1;
    int phase_order_ = 1;
    std::size_t n_ = 0;
    std::vector<Entry> entries_;
};

/// Throws NotANormaliser if a conjugate leaves C* G (or G in linear mode).
ConjugationTable conjugation_table(const CMatrix &gate, const MatrixGroup &group, int arity,
                                   Mode mode = Mode::Projective);

struct Gate {
    CMatrix matrix;
    std::vector<int> wires;
    Mode mode = Mode::Projective;
    std::string label;
    /// Index of a measurement whose outcome would choose this gate. Always rejected.
    std::optional<int> condition;
};

/// Computational-basis measurement of `wire`, taken after the first `after` gates.
struct Measurement {
    int wire = 0;
    std::size_t after = 0;
};

/// phase * factors[0] (x) ... (x) factors[n-1], factors indexing the base group.
struct Observable {
    Cyclo phase{1};
    std::vector<std::size_t> factors;
};

struct PropagationStats {
    std::size_t gates = 0;
    std::size_t lookups = 0;
    std::size_t tables = 0;
};

class Circuit;
/// C^dagger O C by table lookups, last gate first. Ignores measurements.
Observable propagate(const Circuit &circuit, const Observable &observable, PropagationStats *stats = nullptr);
/// Replaces every measurement by a copy gate onto a fresh ancilla: CNOT from |0> when
/// it normalises G (x) G, otherwise CZ onto |+> (qubits). Throws NoDilationGate.
Circuit dilate_measurements(const Circuit &circuit);

/// Immutable once built; copies share the compiled tables.
class Circuit {
   public:
    /// Validates everything up front. Throws NotANormaliser, NotUnitNorm,
    /// AdaptiveGateRejected, DimensionMismatch, InvalidInput.
    static Circuit build(const MatrixGroup &group, int n_wires, std::vector<std::vector<Cyclo>> input,
                         std::vector<Gate> gates, std::vector<Measurement> measurements = {});

    int dim() const;
    int n_wires() const;
    const MatrixGroup &group() const;
    const std::vector<Gate> &gates() const;
    const std::vector<std::vector<Cyclo>> &input() const;
    const std::vector<Measurement> &measurements() const;
    std::size_t distinct_gates() const;

    /// Table for conjugation by gate k's inverse, the step used in backward propagation.
    const ConjugationTable &backward_table(std::size_t k) const;

    struct Impl;

   private:
    friend Observable propagate(const Circuit &circuit, const Observable &observable, PropagationStats *stats);
    friend Circuit dilate_measurements(const Circuit &circuit);
    std::shared_ptr<const Impl> impl_;
};

/// Observable for a group element c g acting on one wire, identity elsewhere.
/// Throws NotAMember if the matrix is not in C* G.
Observable single_wire_observable(const Circuit &circuit, int wire, const CMatrix &matrix);

/// The dense d^n x d^n matrix of an observable; for small n only.
CMatrix observable_matrix(const Circuit &circuit, const Observable &observable);

struct ExpectationOptions {
    /// Evaluate A + A^dagger instead of A.
    bool hermitian_wrapper = false;
};

struct ExpectationResult {
    Cyclo value;
    /// False when a non-Hermitian A was evaluated without the wrapper; value may then be complex.
    bool hermitian = true;
    bool wrapped = false;
    /// Born probabilities, when the observable squares to the identity.
    std::optional<Cyclo> p0;
    std::optional<Cyclo> p1;
    std::size_t ancillas = 0;
    PropagationStats stats;
};

/// <psi0| C^dagger O C |psi0> on the product input. Measurements are dilated first.
ExpectationResult expectation(const Circuit &circuit, const Observable &observable,
                              const ExpectationOptions &options = {});
ExpectationResult expectation(const Circuit &circuit, int target_wire, const CMatrix &observable_matrix,
                              const ExpectationOptions &options = {});

/// The generalised teleportation POVM A_i = (d / |G|) |b_i><b_i| with
/// |b_i> = (U_i^dagger (x) I) sum_j |jj>.
struct TeleportationPovm {
    int dim = 0;
    std::size_t group_order = 0;
    std::vector<CMatrix> elements;
    std::vector<std::vector<Cyclo>> vectors;  // b_i
    Rational weight;                          // d / |G|
    bool complete = false;                    // sum A_i == I exactly
    bool rank_one = false;                    // A_i^2 == tr(A_i) A_i
};

/// Throws NotIrreducible, InvalidInput for a non-unitary group.
TeleportationPovm build_teleportation_povm(const MatrixGroup &group);

struct TeleportationOutcome {
    std::size_t index = 0;
    Cyclo probability;
    /// (A_i (x) I)|alpha>|phi> is proportional to |b_i> (x) U_i|alpha>.
    bool state_matches = false;
    double fidelity = 0;
};

struct TeleportationReport {
    std::size_t group_order = 0;
    bool complete = false;
    bool rank_one = false;
    std::vector<TeleportationOutcome> outcomes;
    bool all_ok() const;
};

/// Throws NotUnitNorm, DimensionMismatch.
TeleportationReport verify_teleportation(const MatrixGroup &group, const std::vector<Cyclo> &alpha);
TeleportationReport verify_teleportation(const TeleportationPovm &povm, const MatrixGroup &group,
                                         const std::vector<Cyclo> &alpha);

/// Named gates: I X Y Z H P S CZ CNOT CX SWAP, and Zroot<k> = diag(1, w_k).
std::optional<CMatrix> named_gate(const std::string &name);

/// 1/sqrt(d) for d <= 4.
Cyclo inv_sqrt_dim(int d);

}  // namespace gencliff

#endif
