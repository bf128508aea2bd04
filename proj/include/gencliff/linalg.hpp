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

#ifndef GENCLIFF_LINALG_HPP
#define GENCLIFF_LINALG_HPP

#include <vector>

#include "gencliff/cyclotomic.hpp"

namespace gencliff {

using CycloRows = std::vector<std::vector<Cyclo>>;

/// Reduces `rows` (each of length ncols) to reduced row echelon form in place and
/// returns the pivot columns. Pivots are chosen to keep entries sparse.
std::vector<int> rref(CycloRows &rows, int ncols);

/// Basis of {x : A x = 0}. One vector per free column, with that coordinate equal to 1.
CycloRows nullspace(CycloRows rows, int ncols);

int rank(CycloRows rows, int ncols);

}  // namespace gencliff

#endif
