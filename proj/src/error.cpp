// Copyright 2026 The qwepi Authors
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

#include "qwepi/error.hpp"

namespace qwepi {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::UnsupportedCoin:
        return "unsupported coin";
    case ErrorKind::InvalidDimension:
        return "invalid dimension";
    case ErrorKind::ResourceLimit:
        return "resource limit";
    case ErrorKind::IncompatibleOperator:
        return "incompatible operator";
    case ErrorKind::DimensionMismatch:
        return "dimension mismatch";
    case ErrorKind::Wraparound:
        return "wraparound";
    case ErrorKind::InvalidState:
        return "invalid state";
    case ErrorKind::InvalidDistribution:
        return "invalid distribution";
    case ErrorKind::OverfullLattice:
        return "overfull lattice";
    case ErrorKind::InactiveWalker:
        return "inactive walker";
    case ErrorKind::Extinct:
        return "epidemic extinct";
    case ErrorKind::NonTermination:
        return "non-termination guard";
    case ErrorKind::InvalidConfig:
        return "invalid configuration";
    case ErrorKind::IncompatibleTable:
        return "incompatible table";
    case ErrorKind::Io:
        return "i/o failure";
    }
    return "unknown";
}

} // namespace qwepi
