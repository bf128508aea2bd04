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

#ifndef GENCLIFF_MATRIX_GROUP_HPP
#define GENCLIFF_MATRIX_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencliff/cmatrix.hpp"
#include "gencliff/numeric.hpp"

namespace gencliff {

struct ClosureOptions {
    std::size_t max_order = 10000;
};

/// Finite group of d x d cyclotomic matrices, stored as an explicit element list.
///
/// Elements are indexed 0..order()-1 with the identity at index 0. Besides the exact
/// matrices, the group keeps a right-multiplication table by generators and a
/// spanning tree of words, so products of elements are computed by index
/// arithmetic. Immutable once built; copies share state.
class MatrixGroup {
   public:
    MatrixGroup() = default;

    /// Breadth-first closure. Throws SingularGenerator, DimensionMismatch, ClosureBudgetExceeded.
    static MatrixGroup close(const std::vector<CMatrix> &generators, const ClosureOptions &options = {},
                             std::string name = "");

    bool valid() const noexcept {
        return impl_ != nullptr;
    }
    const std::string &name() const;
    MatrixGroup with_name(std::string name) const;
    int dim() const;
    std::size_t order() const;
    /// Common conductor of all stored entries.
    int conductor() const;

    const std::vector<CMatrix> &generators() const;
    std::size_t num_generators() const;
    /// Element index of generator t.
    std::size_t generator_index(std::size_t t) const;

    const CMatrix &element(std::size_t i) const;
    const std::vector<CMatrix> &elements() const;
    const ComplexMatrix &approx(std::size_t i) const;
    std::complex<double> approx_trace(std::size_t i) const;

    std::size_t right_multiply(std::size_t i, std::size_t t) const;
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    /// Generator indices w with element(i) = gen[w0] gen[w1] ...
    std::vector<std::size_t> word(std::size_t i) const;

    std::optional<std::size_t> find(const CMatrix &m) const;
    std::size_t index_of(const CMatrix &m) const;

    struct ProjectiveMatch {
        std::size_t index;
        Cyclo scalar;  // m = scalar * element(index)
    };
    /// Every element g with m = c g, ordered by arg(c) in [0, 2 pi).
    std::vector<ProjectiveMatch> find_projective_all(const CMatrix &m) const;
    /// The match with the smallest arg(c), i.e. 0 <= arg(c) < 2 pi / s.
    std::optional<ProjectiveMatch> find_projective(const CMatrix &m) const;

    int element_order(std::size_t i) const;
    /// Least k >= 1 with element(i)^k scalar.
    int projective_order(std::size_t i) const;
    const std::vector<std::size_t> &elements_of_order(int k) const;
    bool commute(std::size_t a, std::size_t b) const;
    /// Comm(U): flags c with element(c) commuting with element(a).
    const std::vector<char> &commutant(std::size_t a) const;

    /// Indices of elements commuting with every generator.
    const std::vector<std::size_t> &centre() const;
    /// Indices of scalar elements.
    const std::vector<std::size_t> &scalars() const;
    bool is_scalar_group() const;
    bool is_irreducible() const;

    /// Orbit representatives (smallest index) of conjugation acting on `subset`,
    /// which must be a union of conjugacy classes.
    std::vector<std::size_t> class_representatives(const std::vector<std::size_t> &subset) const;

    /// Order of the subgroup generated by the listed generators.
    std::size_t subgroup_order(const std::vector<std::size_t> &generator_subset) const;

    /// For groups built by tensor_square: element(i) = base(a) (x) base(b).
    std::optional<std::pair<std::size_t, std::size_t>> tensor_factors(std::size_t i) const;
    std::optional<std::size_t> tensor_index(std::size_t a, std::size_t b) const;
    const MatrixGroup *tensor_base() const;

    struct Impl;

   private:
    friend MatrixGroup tensor_square(const MatrixGroup &group, const ClosureOptions &options);
    friend MatrixGroup central_extension(const MatrixGroup &group, int k, const ClosureOptions &options);
    std::shared_ptr<Impl> impl_;
    std::string name_;
};

/// close_group from the module contract.
MatrixGroup close_group(const std::vector<CMatrix> &generators, std::size_t max_order = 10000);

/// Throws NotAMember if g is not in the group.
int element_order(const CMatrix &g, const MatrixGroup &group);

struct CentreInfo {
    std::vector<CMatrix> elements;
    int s = 1;
    Cyclo min_phase;  // omega_s
};
/// Throws NonScalarCentre when some central element is not scalar.
CentreInfo compute_centre(const MatrixGroup &group);

bool is_irreducible(const MatrixGroup &group);

/// {g1 (x) g2}, generated by g (x) I and I (x) g.
MatrixGroup tensor_square(const MatrixGroup &group, const ClosureOptions &options = {});

/// <group, omega_k I>.
MatrixGroup central_extension(const MatrixGroup &group, int k, const ClosureOptions &options = {});

/// Generator indices kept after greedily dropping generators the others already generate.
std::vector<std::size_t> reduced_generator_set(const MatrixGroup &group);

struct UnitarizeResult {
    ComplexMatrix e;
    std::vector<ComplexMatrix> images;  // E g E^-1 for every element, in element order
    double residual = 0;
};
/// Throws ToleranceNotMet.
UnitarizeResult unitarize(const MatrixGroup &group, double tol);

}  // namespace gencliff

#endif
