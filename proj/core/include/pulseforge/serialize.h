// Copyright 2026 The PulseForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PULSEFORGE_SERIALIZE_H
#define PULSEFORGE_SERIALIZE_H

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "pulseforge/families.h"
#include "pulseforge/solver.h"

namespace pulseforge {

/// JSON document form of a pulse sequence:
///
///   { "target": {"theta": t, "phi": p},
///     "pulses": [{"theta": t1, "phi": p1}, {...}, {...}],
///     "windings": [n1, n2, n3], "branch": "+" | "-" }
///
/// Family documents add "family" and "implemented_sign". Angles are radians
/// written with 17 significant digits; phases are reduced to [0, 2pi).
struct SequenceDocument {
    TargetRotation target;
    std::array<Pulse, 3> pulses;
    WindingNumbers windings;
    Branch branch = Branch::kPlus;
    std::optional<std::string> family;
    int implemented_sign = 1;
};

std::string to_json(const CompositeSequence &seq);
std::string to_json(const FamilySequence &seq);

/// Throws std::invalid_argument with the offending field on malformed input.
SequenceDocument parse_sequence_json(std::string_view text);

}  // namespace pulseforge

#endif  // PULSEFORGE_SERIALIZE_H
