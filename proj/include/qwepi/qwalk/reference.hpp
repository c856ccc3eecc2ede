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

#pragma once

#include <array>

namespace qwepi::qwalk::reference {

// Hand-written reference operators for the 8-site cycle walk with a
// Hadamard coin (3 position qubits, 1 coin qubit). Row = output basis
// state, column = input basis state; joint index = coin * 8 + position.
// These are typed in independently of the operator builders and serve as
// golden data for the verifier and the test suites.

/// k -> k + 1 mod 8.
inline constexpr std::array<std::array<int, 8>, 8> kInc8{{
    {{ 0,  0,  0,  0,  0,  0,  0,  1}},
    {{ 1,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  1,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  1,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  1,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  1,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  1,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  1,  0}},
}};

/// k -> k - 1 mod 8.
inline constexpr std::array<std::array<int, 8>, 8> kDec8{{
    {{ 0,  1,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  1,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  1,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  1,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  1,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  1,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  1}},
    {{ 1,  0,  0,  0,  0,  0,  0,  0}},
}};

/// |up><up| (x) INC + |down><down| (x) DEC.
inline constexpr std::array<std::array<int, 16>, 16> kShift16{{
    {{ 0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0}},
}};

/// sqrt(2) * S (H (x) I); every nonzero is +-1.
inline constexpr std::array<std::array<int, 16>, 16> kEvolutionTimesSqrt2{{
    {{ 0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  1}},
    {{ 1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0}},
    {{ 0,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  1,  0}},
    {{ 0,  1,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0}},
    {{ 0,  0,  1,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0}},
    {{ 0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0}},
    {{ 0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0, -1,  0}},
    {{ 0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0, -1}},
    {{ 1,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0}},
}};

} // namespace qwepi::qwalk::reference
