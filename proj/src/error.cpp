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

#include "gencliff/error.hpp"

namespace gencliff {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::ConductorLimitExceeded:
            return "ConductorLimitExceeded";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::SingularGenerator:
            return "SingularGenerator";
        case ErrorKind::ClosureBudgetExceeded:
            return "ClosureBudgetExceeded";
        case ErrorKind::NotAMember:
            return "NotAMember";
        case ErrorKind::NonScalarCentre:
            return "NonScalarCentre";
        case ErrorKind::ToleranceNotMet:
            return "ToleranceNotMet";
        case ErrorKind::SearchBudgetExceeded:
            return "SearchBudgetExceeded";
        case ErrorKind::NotSquareOfSquare:
            return "NotSquareOfSquare";
        case ErrorKind::NotIrreducible:
            return "NotIrreducible";
        case ErrorKind::UnrecognizedBaseGroup:
            return "UnrecognizedBaseGroup";
        case ErrorKind::MismatchAgainstPaper:
            return "MismatchAgainstPaper";
        case ErrorKind::NotANormaliser:
            return "NotANormaliser";
        case ErrorKind::NoDilationGate:
            return "NoDilationGate";
        case ErrorKind::AdaptiveGateRejected:
            return "AdaptiveGateRejected";
        case ErrorKind::NotUnitNorm:
            return "NotUnitNorm";
        case ErrorKind::InvalidInput:
            return "InvalidInput";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace gencliff
