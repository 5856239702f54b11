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

#include "pulseforge/families.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pulseforge/errors.h"

namespace pulseforge {

namespace {

constexpr double kSignTolerance = 1e-10;

int measure_sign(const std::array<Pulse, 3> &pulses, const TargetRotation &target) {
    Mat2 product = sequence_unitary(pulses).matrix();
    Mat2 goal = target_unitary(target).matrix();
    bool plus = max_abs_diff(product, goal) < kSignTolerance;
    bool minus = max_abs_diff(product, -goal) < kSignTolerance;
    if (plus == minus) {
        throw std::logic_error("family sequence reproduces neither +U nor -U of its target");
    }
    return plus ? 1 : -1;
}

void require_positive(const std::array<double, 3> &thetas, const char *family) {
    for (size_t i = 0; i < 3; i++) {
        if (!(thetas[i] > 0.0)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << family << " indices give theta" << (i + 1) << " = " << thetas[i]
                << ", but every flip angle must be strictly positive";
            throw InvalidIndices(msg.str());
        }
    }
}

FamilySequence assemble(FamilyKind kind, const std::array<double, 3> &thetas, double phi_outer, double phi_inner,
                        const TargetRotation &target) {
    std::array<Pulse, 3> pulses{
        Pulse(thetas[0], phi_outer),
        Pulse(thetas[1], phi_inner),
        Pulse(thetas[2], phi_outer),
    };
    return FamilySequence{kind, pulses, target, measure_sign(pulses, target)};
}

}  // namespace

const char *family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::kCorpse:
            return "corpse";
        case FamilyKind::kShortCorpse:
            return "short_corpse";
        case FamilyKind::kTwin:
            return "twin";
    }
    return "unknown";
}

double corpse_kappa(double theta) { return std::asin(0.5 * std::sin(0.5 * theta)); }

FamilySequence corpse(const TargetRotation &target, CorpseIndices idx) {
    if (idx.nu1 < 0 || idx.nu2 < 0 || idx.nu3 < 0) {
        throw InvalidIndices("CORPSE indices nu1, nu2, nu3 must be non-negative");
    }
    double half = 0.5 * target.theta();
    double kappa = corpse_kappa(target.theta());
    std::array<double, 3> thetas{
        half - kappa + kTwoPi * idx.nu1,
        kTwoPi * idx.nu2 - 2.0 * kappa,
        half - kappa + kTwoPi * idx.nu3,
    };
    require_positive(thetas, "CORPSE");
    return assemble(FamilyKind::kCorpse, thetas, target.phi(), target.phi() + kPi, target);
}

FamilySequence short_corpse(const TargetRotation &target) {
    double kappa = corpse_kappa(target.theta());
    double outer = kPi - 0.5 * target.theta() - kappa;
    std::array<double, 3> thetas{outer, kTwoPi - 2.0 * kappa, outer};
    return assemble(FamilyKind::kShortCorpse, thetas, target.phi() + kPi, target.phi(), target);
}

FamilySequence fundamental_corpse(const TargetRotation &target) { return corpse(target, CorpseIndices{1, 1, 0}); }

FamilySequence twin_corpse(const TargetRotation &target, TwinIndices idx) {
    if (idx.mu1 < 1 || idx.mu3 < 1 || idx.mu2 < 0) {
        throw InvalidIndices("twin indices require mu1 >= 1, mu3 >= 1 and mu2 >= 0");
    }
    double half = 0.5 * target.theta();
    double kappa = corpse_kappa(target.theta());
    std::array<double, 3> thetas{
        kTwoPi * idx.mu1 - half + kappa,
        kTwoPi * idx.mu2 + 2.0 * kappa,
        kTwoPi * idx.mu3 - half + kappa,
    };
    require_positive(thetas, "twin");
    return assemble(FamilyKind::kTwin, thetas, target.phi() + kPi, target.phi(), target);
}

WindingNumbers principal_windings(const std::array<Pulse, 3> &pulses) {
    return WindingNumbers(principal_decomposition(pulses[0].theta()).winding,
                          principal_decomposition(pulses[1].theta()).winding,
                          principal_decomposition(pulses[2].theta()).winding);
}

}  // namespace pulseforge
