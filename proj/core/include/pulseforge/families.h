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

#ifndef PULSEFORGE_FAMILIES_H
#define PULSEFORGE_FAMILIES_H

#include <array>
#include <string>

#include "pulseforge/solver.h"
#include "pulseforge/su2.h"

namespace pulseforge {

/// Indices (nu1, nu2, nu3) of the CORPSE family.
struct CorpseIndices {
    int nu1 = 0;
    int nu2 = 1;
    int nu3 = 0;
};

/// Indices (mu1, mu2, mu3) of the twin family; mu1, mu3 >= 1 and mu2 >= 0.
struct TwinIndices {
    int mu1 = 1;
    int mu2 = 0;
    int mu3 = 1;
};

enum class FamilyKind { kCorpse, kShortCorpse, kTwin };

/// "corpse", "short_corpse" or "twin".
const char *family_name(FamilyKind kind);

/// A closed-form family member. The product of the pulses equals
/// implemented_sign * U(theta, phi); the sign is measured, not predicted.
struct FamilySequence {
    FamilyKind kind;
    std::array<Pulse, 3> pulses;
    TargetRotation target;
    int implemented_sign;
};

/// kappa = arcsin(sin(theta/2) / 2).
double corpse_kappa(double theta);

/// Throws InvalidIndices if any flip angle is not positive.
FamilySequence corpse(const TargetRotation &target, CorpseIndices indices);

/// Shortest CORPSE member, rewritten to implement U(theta, phi) itself.
FamilySequence short_corpse(const TargetRotation &target);

/// CORPSE with indices (1, 1, 0).
FamilySequence fundamental_corpse(const TargetRotation &target);

/// Twin of the CORPSE family. Throws InvalidIndices unless mu1, mu3 >= 1 and mu2 >= 0.
FamilySequence twin_corpse(const TargetRotation &target, TwinIndices indices);

/// Windings of each pulse after reduction to principal angles in (0, 2pi].
WindingNumbers principal_windings(const std::array<Pulse, 3> &pulses);

}  // namespace pulseforge

#endif  // PULSEFORGE_FAMILIES_H
